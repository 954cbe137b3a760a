#!/usr/bin/env python3
"""Writes the reference chains under data/golden/ in the chain JSON schema.

The expressions below are typed in exactly as published (tensor products of
sums, scalar prefactors in front), then expanded multilinearly. Nothing here
touches the C++ kernel, so the files can serve as an independent reference.

    python3 tools/transcribe_golden.py data/golden
"""
import json
import sys
from pathlib import Path

import sympy

q = sympy.Symbol("q")
R = sympy.Rational

MONOMIAL = {"I": "1", "a": "al", "as": "al*", "b": "be", "bs": "be*", "z": "z"}


class T:
    """Formal linear combination of tensor words over generator names."""

    def __init__(self, terms=None):
        self.terms = dict(terms or {})

    @staticmethod
    def gen(name):
        return T({(name,): sympy.Integer(1)})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return T(out)

    def __neg__(self):
        return T({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return T({k: scalar * v for k, v in self.terms.items()})

    def __matmul__(self, other):
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
        return T(out)


I, a, as_, b, bs, z = (T.gen(n) for n in ("I", "a", "as", "b", "bs", "z"))


def laurent_str(expr):
    """Render in the QLaurent grammar: ascending exponents, 'c*q^e'."""
    expr = sympy.expand(expr)
    if expr == 0:
        return "0"
    poly = sympy.Poly(sympy.expand(expr * q**64), q)
    terms = sorted((m[0] - 64, c) for m, c in poly.terms())
    out = ""
    for i, (e, c) in enumerate(terms):
        c = sympy.Rational(c)
        mag = abs(c)
        if i == 0:
            out += "-" if c < 0 else ""
        else:
            out += " - " if c < 0 else " + "
        out += str(mag.p) if mag.q == 1 else f"{mag.p}/{mag.q}"
        if e != 0:
            out += f"*q^{e}"
    return out


def to_json(t, degree, description):
    terms = []
    for slots, c in sorted(t.terms.items()):
        c = sympy.expand(c)
        if c == 0:
            continue
        assert len(slots) == degree + 1
        terms.append({"coeff": laurent_str(c), "slots": [MONOMIAL[s] for s in slots]})
    return {"description": description, "degree": degree, "terms": terms}


def ch1():
    return R(1, 8) * (1 - q**2) * (
        z @ (b @ bs - bs @ b) + bs @ (z @ b - b @ z) + b @ (bs @ z - z @ bs)
    )


def c_z():
    return (
        (1 - q**4) * (b @ bs @ b @ bs - bs @ b @ bs @ b)
        + (1 - q**2)
        * (
            z @ z @ (b @ bs - bs @ b)
            + (b @ z @ z @ bs - bs @ z @ z @ b)
            + (b @ bs - bs @ b) @ z @ z
            + z @ (b @ bs - bs @ b) @ z
            - z @ (b @ z @ bs - bs @ z @ b)
            - (b @ z @ bs - bs @ z @ b) @ z
        )
        + (a @ as_ - q**2 * as_ @ a) @ (b @ bs - bs @ b)
        + (b @ bs - bs @ b) @ (a @ as_ - q**2 * as_ @ a)
        + (b @ a - q * a @ b) @ (as_ @ bs - q * bs @ as_)
        + (as_ @ bs - q * bs @ as_) @ (b @ a - q * a @ b)
        + (as_ @ b - q * b @ as_) @ (q * a @ bs - bs @ a)
        + (q * a @ bs - bs @ a) @ (as_ @ b - q * b @ as_)
    )


def c_alpha():
    return (
        (z @ as_ - as_ @ z) @ (bs @ b - b @ bs)
        + q**2 * (bs @ b - b @ bs) @ (z @ as_ - as_ @ z)
        + q * (z @ b - b @ z) @ (as_ @ bs - q * bs @ as_)
        + (as_ @ bs - q * bs @ as_) @ (z @ b - b @ z)
        + q * (bs @ z - z @ bs) @ (as_ @ b - q * b @ as_)
        + (as_ @ b - q * b @ as_) @ (bs @ z - z @ bs)
    )


def c_alpha_star():
    return (
        q**2 * (z @ a - a @ z) @ (b @ bs - bs @ b)
        + (b @ bs - bs @ b) @ (z @ a - a @ z)
        + (bs @ z - z @ bs) @ (b @ a - q * a @ b)
        + q * (b @ a - q * a @ b) @ (bs @ z - z @ bs)
        + (z @ b - b @ z) @ (bs @ a - q * a @ bs)
        + q * (bs @ a - q * a @ bs) @ (z @ b - b @ z)
    )


def c_beta():
    return (
        (1 - q**4) * ((bs @ z - z @ bs) @ b @ bs + bs @ b @ (bs @ z - z @ bs))
        + (1 - q**2) * (bs @ z @ z @ z - z @ bs @ z @ z + z @ z @ bs @ z - z @ z @ z @ bs)
        + (bs @ z - z @ bs) @ (a @ as_ - q**2 * as_ @ a)
        + (a @ as_ - q**2 * as_ @ a) @ (bs @ z - z @ bs)
        + (a @ z - z @ a) @ (as_ @ bs - q * bs @ as_)
        + q * (as_ @ bs - q * bs @ as_) @ (a @ z - z @ a)
        + (bs @ a - q * a @ bs) @ (as_ @ z - z @ as_)
        + q * (as_ @ z - z @ as_) @ (bs @ a - q * a @ bs)
    )


def c_beta_star():
    return (
        (1 - q**4) * ((z @ b - b @ z) @ bs @ b + b @ bs @ (z @ b - b @ z))
        + (1 - q**2) * (-b @ z @ z @ z + z @ b @ z @ z - z @ z @ b @ z + z @ z @ z @ b)
        + (z @ b - b @ z) @ (a @ as_ - q**2 * as_ @ a)
        + (a @ as_ - q**2 * as_ @ a) @ (z @ b - b @ z)
        + q * (z @ as_ - as_ @ z) @ (b @ a - q * a @ b)
        + (b @ a - q * a @ b) @ (z @ as_ - as_ @ z)
        + q * (as_ @ b - q * b @ as_) @ (z @ a - a @ z)
        + (z @ a - a @ z) @ (as_ @ b - q * b @ as_)
    )


def ch2():
    return R(1, 32) * (
        z @ c_z() + a @ c_alpha() + as_ @ c_alpha_star() + b @ c_beta() + bs @ c_beta_star()
    )


def bch2():
    return R(1, 16) * (1 - q**2) * (
        I @ z @ (b @ bs - bs @ b) + I @ b @ (bs @ z - z @ bs) + I @ bs @ (z @ b - b @ z)
    )


def main():
    out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "data/golden")
    out_dir.mkdir(parents=True, exist_ok=True)
    files = {
        "ch0.json": {"description": "degree-0 character component (published: zero)", "degree": 0, "terms": []},
        "ch1.json": to_json(ch1(), 2, "degree-2 character component, published closed form"),
        "ch2.json": to_json(ch2(), 4, "degree-4 character component, published five-block form"),
        "bch2.json": to_json(bch2(), 3, "Hochschild boundary of the degree-4 component, published closed form"),
    }
    for name, payload in files.items():
        (out_dir / name).write_text(json.dumps(payload, indent=1) + "\n")
        print(f"{name}: {len(payload['terms'])} terms")


if __name__ == "__main__":
    main()
