"""Smoke test for the pyuqf extension module.

Build and install with
    pip install --no-build-isolation ./crates/py
then run this file with python3.
"""

import json
import math

import pyuqf


def main():
    f = pyuqf.Field(15)
    assert (f.u0, f.period, f.s) == (3, [1, 6], 2)
    f.check_invariants()
    assert f.m_d == 1
    assert [str(x) for x in f.indecomposables()] == [str(f.elem(1, 0))]

    f2 = pyuqf.Field(2)
    eps0 = f2.eps0
    assert (eps0.a, eps0.b, eps0.norm()) == (1, 1, -1)
    assert (eps0 * eps0.conj()).a == -1
    form = f2.universal_form()
    assert len(form) == 16
    x = f2.elem(4, 2)
    assert x.is_totally_positive()
    parts = f2.decompose(x)
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    assert total == x
    w = f2.witness(x)
    value = f2.elem(0, 0)
    for c, v in zip(form, w):
        value = value + c * v * v
    assert value == x
    assert f2.represent(x) is not None

    f5 = pyuqf.Field(5)
    assert f5.class_number() == 1
    rep = json.loads(f5.l_report(100_000))
    want = 2 * math.log((1 + math.sqrt(5)) / 2) / math.sqrt(5)
    assert abs(rep["l1"]["mid"] - want) <= rep["l1"]["rad"] + 1e-12
    (l1, l1_rad), _ = pyuqf.lvalues(5, 100_000)
    assert abs(l1 - 0.43041) < 1e-5

    n = 10**30 + 7
    assert sum(t * t for t in pyuqf.four_square(n)) == n
    assert [pyuqf.kronecker(5, k) for k in range(1, 5)] == [1, -1, -1, 1]

    for bad in (12, 1):
        try:
            pyuqf.Field(bad)
        except ValueError:
            pass
        else:
            raise AssertionError(f"Field({bad}) accepted")
    try:
        f2.elem(1, 0) + f5.elem(1, 0)
    except ValueError:
        pass
    else:
        raise AssertionError("mixed fields accepted")
    print("pyuqf smoke test ok")


if __name__ == "__main__":
    main()
