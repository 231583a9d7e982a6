#!/usr/bin/env python3
"""Smoke test of the python bindings (PYTHONPATH points at the build tree)."""

import sys

import ncreal

failures = []


def check(name, cond):
    if cond:
        print(f"ok: {name}")
    else:
        print(f"FAIL: {name}")
        failures.append(name)


check("radical of a hermitian square", ncreal.radical_generators(["x1* x1"]) == ["x1"])

check("is_real no", not ncreal.is_real([ncreal.Poly("x1* x1")]))
check("is_real yes", ncreal.is_real([ncreal.Poly("x1")]))

check(
    "alpha yes",
    ncreal.alpha_member(ncreal.Poly("x1"), [ncreal.Poly("x1* x1")], 2) == "yes",
)
check(
    "alpha no",
    ncreal.alpha_member(ncreal.Poly("x1 x1"), [ncreal.Poly("x1* x1")], 2) == "no",
)

check(
    "member",
    ncreal.member(ncreal.Poly("x2 x1* x1"), [ncreal.Poly("x1* x1")])
    and not ncreal.member(ncreal.Poly("x1"), [ncreal.Poly("x1* x1")]),
)

# polynomial algebra and canonical printing
p = ncreal.Poly("x1") * ncreal.Poly("x2").adjoint() + ncreal.Poly("3/2")
check("poly algebra", str(p) == "x1 x2* + 3/2")
check("round trip", ncreal.parse_poly(str(p)) == p)

# full report dictionary
result = ncreal.real_radical([ncreal.Poly("x1* x1")])
check(
    "report fields",
    result["degree_bound"] == 1
    and not result["unit"]
    and [str(g) for g in result["generators"]] == ["x1"]
    and "rounds" in result["trace_json"],
)

# univariate matrix layer
smith = ncreal.smith_normal_form("[x, 1; 0, x]")
check("smith diagonal", smith["diagonal"] == ["1", "x^2"])

check("eradical", ncreal.eradical(["[(x^2+1)*(x-1)^2]"]) == "[x - 1]")
check(
    "eradical membership",
    ncreal.eradical_member("[x - 1]", ["[(x^2+1)*(x-1)^2]"])
    and not ncreal.eradical_member("[1]", ["[(x^2+1)*(x-1)^2]"]),
)

# parse failures surface as ValueError
try:
    ncreal.Poly("x1 + ((x2")
    check("parse error raises", False)
except ValueError:
    check("parse error raises", True)

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
