"""Smoke test for the pyquadratize extension.

Build and install first:  pip install ./crates/python  (or maturin develop)
"""

import itertools

import pyquadratize as q

P53 = "".join(
    f"1 x{a} x{b} x{c}\n" for a, b, c in itertools.combinations(range(1, 6), 3)
)


def main():
    p = q.Polynomial.parse(P53)
    assert p.degree == 3 and len(p) == 10

    r = q.symm_red(p)
    assert r.aux_vars == ["w1", "w2"], r.aux_vars
    assert r.quadratic.degree == 2
    assert q.check_equivalence(p, r) == (True, None)
    assert r.to_text().startswith("# aux: w1..w2\n")

    m = q.mono_red(p)
    assert m.aux_count == 10
    assert q.check_equivalence(p, m)[0]

    # min over auxiliaries at all-ones reproduces C(5, 3)
    ones = {f"x{i}": 1 for i in range(1, 6)}
    best = min(
        r.quadratic.evaluate({**ones, "w1": a, "w2": b})
        for a in (0, 1)
        for b in (0, 1)
    )
    assert best == 10, best

    assert q.reduction_coefficients(1, 5, 3) == ([7, 3], [-5, -1])
    assert q.reduction_coefficients(-1, 5, 3) == ([8, 32], [-3, -7])

    k8 = q.utility_polynomial(8, list(itertools.combinations(range(8), 2)))
    assert len(k8.variables()) == 24 and len(k8) == 1429

    try:
        q.Polynomial.parse("1 y1\n")
    except ValueError:
        pass
    else:
        raise AssertionError("bad variable accepted")

    print("pyquadratize smoke test passed")


if __name__ == "__main__":
    main()
