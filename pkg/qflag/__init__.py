"""
qflag

Exact computations with orthocells of S_n, the U_q(sl_n) modules V^i ⊗ V^j
and the quadratic relations of the quantum flag variety.
"""

__version__ = "0.1.0"
