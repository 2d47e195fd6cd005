"""
Published equations of the worked examples, kept as data for the reproduction checks.
"""

from fractions import Fraction

from ellsurf.weierstrass import WeierstrassSurface
from exactcore.rational_function import RationalFunction


def printed_qm_g4() -> WeierstrassSurface:
    """
    G^(4) of the curve with quaternionic multiplication.

    y^2 = x^3 + 529200*(6 - 5/t^4)*x - 9261000*(4*t^4 + 20 - 3431/t^4)

    Returns:
        WeierstrassSurface: The equation
    """
    a4 = RationalFunction.laurent({0: 529200 * 6, -4: -529200 * 5})
    a6 = RationalFunction.laurent({4: -9261000 * 4, 0: -9261000 * 20, -4: 9261000 * 3431})
    return WeierstrassSurface.short(a4, a6)


def qm_twisted_g4() -> WeierstrassSurface:
    """
    The same surface after the quadratic twist by 210.

    y^2 = x^3 + 12*(6 - 5/t^4)*x - (4*t^4 + 20 - 3431/t^4)

    Returns:
        WeierstrassSurface: The simplified equation
    """
    a4 = RationalFunction.laurent({0: 72, -4: -60})
    a6 = RationalFunction.laurent({4: -4, 0: -20, -4: 3431})
    return WeierstrassSurface.short(a4, a6)


def printed_split_g4() -> WeierstrassSurface:
    """
    G^(4) of the curve whose Jacobian splits, with X, Y and t rescaled.

    y^2 = x^3 + 33*(2933005 - 1126255812/t^4)*x
        - 2*(28449792*t^4 - 8690133815 - 274280846290470/t^4)

    Returns:
        WeierstrassSurface: The equation
    """
    a4 = RationalFunction.laurent({0: 33 * 2933005, -4: -33 * 1126255812})
    a6 = RationalFunction.laurent(
        {4: -2 * 28449792, 0: 2 * 8690133815, -4: 2 * 274280846290470}
    )
    return WeierstrassSurface.short(a4, a6)


def printed_example43_h3() -> WeierstrassSurface:
    """
    H^(3) at (a, b, c) = (-1, 1/7, -6/7).

    y^2 = x^3 - 1354/7*x^2 + 936/7*(t^3 + 42989/819 + 4/t^3)*x + 6084/49*(t^3 - 4/t^3)^2

    Returns:
        WeierstrassSurface: The equation
    """
    a2 = Fraction(-1354, 7)
    a4 = RationalFunction.laurent({3: 1, 0: Fraction(42989, 819), -3: 4}) * Fraction(936, 7)
    root = RationalFunction.laurent({3: 1, -3: -4})
    return WeierstrassSurface.short(a4, root**2 * Fraction(6084, 49), a2)
