"""Shared builders for the worked examples used across the test suite."""

from minvan.sorou import Sorou, make_root, root_mul, sorou


def prod(*roots) -> tuple[int, int]:
    out = (1, 0)
    for r in roots:
        out = root_mul(out, r)
    return out


def neg(r) -> tuple[int, int]:
    return root_mul(r, (2, 1))


def weight21_height2_sorou() -> Sorou:
    """h = sum_j nu_7^j f_j with f_j = 1 + nu_3 nu_5^4 for j in {0,1,2,3,5},
    f_4 = -nu_3 - nu_5^4 + nu_3^2 (nu_5 + nu_5^2 + nu_5^3) and
    f_6 = -nu_5 - nu_5^2 - nu_5^3 - 2 nu_5^4 - nu_3^2 nu_5^4."""
    nu = make_root
    terms = []
    for j in (0, 1, 2, 3, 5):
        terms += [nu(7, j), prod(nu(7, j), nu(3, 1), nu(5, 4))]
    terms += [prod(nu(7, 4), neg(nu(3, 1))), prod(nu(7, 4), neg(nu(5, 4)))]
    terms += [prod(nu(7, 4), nu(3, 2), nu(5, k)) for k in (1, 2, 3)]
    terms += [prod(nu(7, 6), neg(nu(5, k))) for k in (1, 2, 3)]
    terms += [prod(nu(7, 6), neg(nu(5, 4)))] * 2
    terms += [prod(nu(7, 6), neg(prod(nu(3, 2), nu(5, 4))))]
    return sorou(terms)


WEIGHT21_TYPE_TEXT = "(R7;1:0+15:2;(R5;1:0)&(R3;1:0);(R5;1:0;(R3;1:0);(R3;1:0)))"
