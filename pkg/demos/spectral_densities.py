#!/usr/bin/env python3
"""Compare the three ultraviolet-cutoff models of an Ohmic bath.

J(w) = gamma * w * envelope(w / Lam) with an abrupt step, a Drude-Lorentz
roll-off, or an exponential suppression.  At moderate cutoff the three
disagree visibly around w ~ Lam; pushed to Lam = 1e6 they collapse onto the
bare Ohmic line for every frequency of interest.  Writes two CSVs next to
this script (gnuplot/pandas-ready).
"""

from pathlib import Path

import numpy as np

from qbmag import Cutoff, SpectralDensity, spectral_density

OUT = Path(__file__).resolve().parent

for lam, fname in ((1e3, "spectra_lam1e3.csv"), (1e6, "spectra_lam1e6.csv")):
    omega = np.logspace(0, np.log10(5e3), 300)
    cols = [
        spectral_density(SpectralDensity(1.0, cutoff, lam), omega)
        for cutoff in (Cutoff.ABRUPT, Cutoff.DRUDE_LORENTZ, Cutoff.EXPONENTIAL)
    ]
    table = np.column_stack([omega] + cols)
    np.savetxt(OUT / fname, table, delimiter=",", header="omega,J_abrupt,J_DL,J_exp", comments="")
    band = omega <= 1e3
    spread = np.max(
        (np.max(cols, axis=0)[band] - np.min(cols, axis=0)[band]) / np.min(cols, axis=0)[band]
    )
    print("Lam = %g: wrote %s, max pairwise spread below w = 1e3: %.2e" % (lam, fname, spread))

print("at Lam = 1e6 the three models agree to better than 0.2% -- the cutoff"
      " has become invisible at physical frequencies")
