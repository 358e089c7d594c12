"""
Exhaustive verification and the figure
======================================

Run the cross-check over every instance with n <= 6, then draw the image of
Sz on C(Delta^3)(0,3) inside G(Delta^3)(0,3).
"""

import time

from szczarba.core import verify_range
from szczarba.diagrams import sz_figure_tikz

t0 = time.perf_counter()
report = verify_range(6)
print(report.text(), end="")
print(f"({time.perf_counter() - t0:.2f} s)")

# TikZ source; paste into a document that loads tikz.  Red marks the image.
print(sz_figure_tikz(3, 0, 3))
