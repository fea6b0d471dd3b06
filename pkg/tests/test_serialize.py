"""JSON round-trips for fields, polynomials, matrices, codes, certificates."""

import json
import random

import pytest

from intertwine import (
    FiniteField,
    Matrix,
    Partition,
    Poly,
    construct_code,
    construct_extremal,
    factor,
    intertwiner_basis,
    min_distance,
    nilpotent_matrix,
    primary_decomposition,
    verify_certificate,
)
from intertwine import serialize
from support import get_field, rand_matrix

F2 = FiniteField(2)
F5 = FiniteField(5)


def roundtrip(to_json, from_json, value):
    # through an actual JSON string, so types survive serialization for real
    return from_json(json.loads(json.dumps(to_json(value))))


def test_field_roundtrip():
    assert roundtrip(serialize.field_to_json, serialize.field_from_json, F5) == F5
    f9 = get_field(9)
    assert roundtrip(serialize.field_to_json, serialize.field_from_json, f9) == f9
    assert "modulus" not in serialize.field_to_json(F5)


def test_poly_roundtrip():
    poly = Poly(F5, (2, 0, 1))
    assert roundtrip(serialize.poly_to_json, serialize.poly_from_json, poly) == poly


def test_matrix_roundtrip():
    rng = random.Random(1)
    m = rand_matrix(rng, get_field(9), 3, 4)
    assert roundtrip(serialize.matrix_to_json, serialize.matrix_from_json, m) == m
    assert serialize.matrix_to_json(m)["entries"] == [list(m.row(i)) for i in range(3)]


def test_partition_roundtrip():
    lam = Partition([3, 1, 1])
    assert serialize.partition_from_json(serialize.partition_to_json(lam)) == lam


def test_code_roundtrip_with_distance_metadata():
    code = intertwiner_basis([Matrix.zero(F2, 2, 2)], [Matrix.zero(F2, 2, 2)])
    coded = code.with_distance(min_distance(code), 1 << 24)
    back = roundtrip(serialize.code_to_json, serialize.code_from_json, coded)
    assert back == coded
    assert back.d == 1 and back.d_budget == 1 << 24
    blob = serialize.code_to_json(code)
    assert blob["d"] is None and blob["k"] == 4


def test_decomposition_json_shape():
    dec = primary_decomposition(nilpotent_matrix(F2, Partition([2, 1])))
    blob = serialize.decomposition_to_json(dec)
    assert blob == [{"irr": {"field": {"p": 2, "e": 1}, "coeffs": [0, 1]},
                     "mult": 3, "partition": [2, 1]}]


def test_factorization_json_shape():
    fact = factor(Poly(F2, (0, 1, 0, 0, 1)))
    blob = serialize.factorization_to_json(fact)
    assert blob["unit"] == 1
    assert [f["coeffs"] for f in blob["factors"]] == [[0, 1], [1, 1], [1, 1, 1]]


@pytest.mark.parametrize("cert_args", [("code", (3, 2, 2, 5)), ("extremal", (4, 2, 5))])
def test_certificate_roundtrip(cert_args):
    kind, args = cert_args
    field = get_field(args[-1])
    if kind == "code":
        cert = construct_code(*args[:-1], field)
    else:
        cert = construct_extremal(*args[:-1], field)
    back = roundtrip(serialize.certificate_to_json, serialize.certificate_from_json, cert)
    assert back == cert
    assert verify_certificate(back).passed


def test_certificate_key_order_is_stable():
    cert = construct_code(2, 2, 1, F5)
    keys = list(serialize.certificate_to_json(cert))
    assert keys == ["field", "r", "s", "k", "A0", "B0", "zetas", "alpha", "beta",
                    "gamma", "R", "S", "A", "B", "X", "row_blocks", "claimed_d",
                    "transposed"]


def test_report_json_shape():
    cert = construct_code(2, 2, 1, F5)
    blob = serialize.report_to_json(verify_certificate(cert))
    assert blob["passed"] is True
    assert blob["distance_skipped"] is False
    assert all(set(c) == {"name", "passed", "detail"} for c in blob["checks"])


@pytest.mark.parametrize("blob", [
    {"p": 2},                                  # missing e
    {"p": "2", "e": 1},                        # wrong type
    {"field": {"p": 2, "e": 1}},               # poly without coeffs
    {"field": {"p": 2, "e": 1}, "coeffs": [0, "x"]},
])
def test_malformed_input_raises_value_error(blob):
    with pytest.raises(ValueError):
        if "coeffs" in blob or "field" in blob:
            serialize.poly_from_json(blob)
        else:
            serialize.field_from_json(blob)


def test_malformed_matrix_rejected():
    blob = {"field": {"p": 2, "e": 1}, "rows": 2, "cols": 2, "entries": [[1, 0]]}
    with pytest.raises(ValueError):
        serialize.matrix_from_json(blob)
    blob = {"field": {"p": 2, "e": 1}, "rows": 1, "cols": 2, "entries": [[1, 0, 0]]}
    with pytest.raises(ValueError):
        serialize.matrix_from_json(blob)
