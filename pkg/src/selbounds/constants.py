"""Mathematical constants embedded to 30 significant digits.

These appear inside certified bound formulas, so they are pinned here
rather than recomputed.
"""

# Euler-Mascheroni constant
EULER_GAMMA = 0.577215664901532860606512090082

# Catalan's constant
CATALAN = 0.915965594177219015054603514932

# trigamma(1/4) = pi^2 + 8*Catalan; quarter of it is the zero-sum gamma-factor
# constant checked against the 4.3 ceiling used in the explicit bounds.
TRIGAMMA_QUARTER = 4.29933228824506542407721626436  # (pi^2 + 8*Catalan)/4

LOG2 = 0.693147180559945309417232121458
