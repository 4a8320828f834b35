"""Hand-built bihomogeneous systems with proper projection, shared by tests."""

from arithbertini.elimination import BiSystem
from arithbertini.exactalg import MultiPoly, iter_points_projective
from arithbertini.variety import VarietyPresentation, points_mod_p


def _vars(xs, ys):
    return MultiPoly.variables_of(xs + ys)


def hand_systems():
    P1 = VarietyPresentation.projective_space(1)
    xs1 = P1.variables
    X0, X1, Y0, Y1 = _vars(xs1, ("Y0", "Y1"))
    out = [
        ("P1 Y0-fibre", BiSystem(P1, (Y0 * X0, Y0 * X1), ("Y0", "Y1"))),
        ("P1 rotation", BiSystem(P1, (Y0 * X0 + Y1 * X1, Y0 * X1 - Y1 * X0), ("Y0", "Y1"))),
    ]
    X0, X1, Y0, Y1, Y2 = _vars(xs1, ("Y0", "Y1", "Y2"))
    w = Y0 * X0 ** 2 + Y1 * X0 * X1 + Y2 * X1 ** 2
    out.append(("P1 double roots", BiSystem(P1, (w, w.diff("X0"), w.diff("X1")), ("Y0", "Y1", "Y2"))))
    out.append(("P1 two conditions", BiSystem(P1, (X0 * Y1 - X1 * Y0, X0 ** 2 * Y2 - X1 ** 2 * Y0),
                                              ("Y0", "Y1", "Y2"))))
    conic = VarietyPresentation(("X0", "X1", "X2"), (MultiPoly.parse("X0*X2 - X1^2", ("X0", "X1", "X2")),), 1, 2)
    X0, X1, X2, Y0, Y1, Y2 = _vars(conic.variables, ("Y0", "Y1", "Y2"))
    out.append(("conic line pair", BiSystem(conic, (Y0 * X0 + Y1 * X1 + Y2 * X2, Y0 * X1 - Y1 * X0),
                                            ("Y0", "Y1", "Y2"))))
    out.append(("conic incidence", BiSystem(conic, (X0 * Y1 - X1 * Y0, X1 * Y2 - X2 * Y1, X0 * Y2 - X2 * Y0),
                                            ("Y0", "Y1", "Y2"))))
    return out


def projection_points_mod_p(sys: BiSystem, p: int):
    """GF(p)-points y such that the specialized system has a GF(p)-zero on X."""
    xpts = list(points_mod_p(sys.variety, p))
    ny = len(sys.y_vars)
    for y in iter_points_projective(ny - 1, p):
        for x in xpts:
            pt = tuple(x) + tuple(y)
            if all(u.evaluate_mod(pt, p) == 0 for u in sys.equations):
                yield y
                break
