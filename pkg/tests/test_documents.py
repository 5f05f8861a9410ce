import random

import pytest

from daxcalc import (
    ExplicitKernel,
    Factor,
    GroupSpec,
    InversePairsKernel,
    ManifoldModel,
    ParseError,
    TrivialKernel,
    ValidationError,
    instantiate,
    normalize,
    parse_ringexpr,
    phi,
)
from daxcalc.documents import (
    disc_from_json,
    disc_to_json,
    execute,
    group_from_json,
    group_to_json,
    kernel_from_json,
    kernel_to_json,
    load_json,
    manifold_from_json,
    manifold_to_json,
    point_document_from_json,
    render_text,
    session_from_json,
)

from helpers import random_kernel, random_spec, random_srdata

SPEC = GroupSpec((Factor("t"), Factor("a", 2)))


def test_load_json_position():
    with pytest.raises(ParseError) as excinfo:
        load_json('{"a": }')
    assert excinfo.value.position == 6


def test_group_round_trip():
    obj = group_to_json(SPEC)
    assert obj == {"factors": [{"type": "Z", "name": "t"}, {"type": "Zn", "name": "a", "n": 2}]}
    assert group_from_json(obj) == SPEC
    assert group_from_json({"factors": []}).is_trivial


@pytest.mark.parametrize(
    "obj, fragment",
    [
        ([], "expected an object"),
        ({}, "missing required key"),
        ({"factors": {}}, "expected a list"),
        ({"factors": [{"type": "Q", "name": "t"}]}, "factor type"),
        ({"factors": [{"type": "Z"}]}, "missing required key 'name'"),
        ({"factors": [{"type": "Z", "name": "t", "n": 2}]}, "unknown key"),
        ({"factors": [{"type": "Zn", "name": "a", "n": 1}]}, "order >= 2"),
        ({"factors": [{"type": "Zn", "name": "a", "n": "2"}]}, "expected an integer"),
        ({"factors": [{"type": "Z", "name": "t"}, {"type": "Z", "name": "t"}]}, "distinct"),
        ({"factors": [{"type": "Z", "name": "bad name"}]}, "invalid factor name"),
    ],
)
def test_group_schema_errors(obj, fragment):
    with pytest.raises(ValidationError) as excinfo:
        group_from_json(obj, "group")
    assert fragment in str(excinfo.value)
    assert "group" in str(excinfo.value)


def test_kernel_round_trip():
    for kernel in (
        TrivialKernel(),
        InversePairsKernel(),
        ExplicitKernel((parse_ringexpr("t - t^-1", SPEC),)),
    ):
        assert kernel_from_json(kernel_to_json(kernel), SPEC) == kernel


@pytest.mark.parametrize(
    "obj, fragment",
    [
        ({}, "'preset' or a 'generators'"),
        ({"preset": "huge"}, "unknown kernel preset"),
        ({"preset": "trivial", "generators": []}, "unknown key"),
        ({"generators": ["t - t"]}, "must be nonzero"),
        ({"generators": ["1"]}, "identity"),
        ({"generators": [5]}, "expected a string"),
    ],
)
def test_kernel_schema_errors(obj, fragment):
    with pytest.raises(ValidationError) as excinfo:
        kernel_from_json(obj, SPEC)
    assert fragment in str(excinfo.value)


def test_kernel_generator_parse_error_carries_path():
    with pytest.raises(ParseError) as excinfo:
        kernel_from_json({"generators": ["t +"]}, SPEC)
    assert "dax_kernel.generators[0]" in str(excinfo.value)


def test_manifold_round_trip():
    manifold = ManifoldModel(SPEC, InversePairsKernel(), "a label")
    obj = manifold_to_json(manifold)
    assert manifold_from_json(obj) == manifold
    for preset in ("boundary_connect_sum", "connect_sum", "simply_connected"):
        m = instantiate(preset)
        assert manifold_from_json(manifold_to_json(m)) == m


def test_manifold_kernel_parsed_over_declared_group():
    obj = {
        "group": {"factors": [{"type": "Z", "name": "g"}]},
        "dax_kernel": {"generators": ["g^2 - g^-2"]},
    }
    manifold = manifold_from_json(obj)
    gen = manifold.kernel.generators[0]
    assert str(gen) == "g^2 - g^-2"
    with pytest.raises(ParseError):
        manifold_from_json(
            {
                "group": {"factors": [{"type": "Z", "name": "g"}]},
                "dax_kernel": {"generators": ["t"]},
            }
        )


def test_disc_round_trip():
    obj = {"double_tubes": ["a"], "sr_discs": [{"sign": 1, "word": "t"}]}
    data = disc_from_json(obj, SPEC)
    assert disc_to_json(data) == obj
    assert disc_from_json({}, SPEC).is_empty


def test_disc_round_trip_fuzz():
    rng = random.Random(61)
    for _ in range(200):
        spec = random_spec(rng)
        data = random_srdata(rng, spec)
        assert disc_from_json(disc_to_json(data), spec) == data


@pytest.mark.parametrize(
    "obj, fragment",
    [
        ({"sr_discs": [{"sign": 2, "word": "t"}]}, "sign must be 1 or -1"),
        ({"sr_discs": [{"sign": True, "word": "t"}]}, "expected an integer"),
        ({"sr_discs": [{"sign": 1}]}, "missing required key 'word'"),
        ({"sr_discs": [{"sign": 1, "word": "t", "extra": 0}]}, "unknown key"),
        ({"double_tubes": [1]}, "expected a string"),
        ({"tubes": []}, "unknown key"),
    ],
)
def test_disc_schema_errors(obj, fragment):
    with pytest.raises(ValidationError) as excinfo:
        disc_from_json(obj, SPEC, "disc")
    assert fragment in str(excinfo.value)


def test_point_document():
    points = point_document_from_json(
        {"points": [{"sign": 1, "word": "t"}, {"sign": -1, "word": "1"}]}, SPEC
    )
    assert len(points) == 2
    assert points[1][1].is_identity
    with pytest.raises(ValidationError):
        point_document_from_json({"points": [{"sign": 0, "word": "t"}]}, SPEC)


SESSION = {
    "manifold": "boundary_connect_sum",
    "discs": {
        "d1": {"double_tubes": [], "sr_discs": [{"sign": 1, "word": "t"}]},
        "d0": {},
    },
    "queries": [
        {"kind": "compare", "discs": ["d1", "d0"]},
        {"kind": "invariant", "disc": "d1"},
        {"kind": "reduce", "element": "t + t - t^2"},
        {"kind": "normalize", "disc": "d1"},
        {"kind": "pairing", "points": [{"sign": 1, "word": "t"}, {"sign": -1, "word": "1"}]},
    ],
}


def test_session_execution():
    doc = session_from_json(SESSION)
    assert doc.manifold == instantiate("boundary_connect_sum")
    results = execute(doc)
    assert [r["kind"] for r in results] == ["compare", "invariant", "reduce", "normalize", "pairing"]
    assert results[0]["outcome"] == "NOT_ISOTOPIC"
    assert results[0]["certificate"] == "t + t^-1"
    assert results[1]["value"] == "t + t^-1"
    assert results[2]["value"] == "2*t - t^2"
    assert results[3]["value"] == {"double_tubes": [], "sr_discs": [{"sign": 1, "word": "t"}]}
    assert results[4] == {"kind": "pairing", "value": "t", "dropped": 1}
    lines = render_text(results)
    assert lines == [
        "NOT_ISOTOPIC  certificate: t + t^-1",
        "t + t^-1",
        "2*t - t^2",
        '{"double_tubes": [], "sr_discs": [{"sign": 1, "word": "t"}]}',
        "t",
    ]


def test_session_inline_manifold():
    doc = session_from_json(
        {
            "manifold": {
                "group": {"factors": [{"type": "Z", "name": "t"}]},
                "dax_kernel": {"preset": "inverse_pairs"},
            },
            "queries": [{"kind": "reduce", "element": "t^-3"}],
        }
    )
    assert execute(doc) == [{"kind": "reduce", "value": "t^3"}]


@pytest.mark.parametrize(
    "obj, fragment",
    [
        ({}, "missing required key 'manifold'"),
        ({"manifold": "nope"}, "unknown preset"),
        ({"manifold": "connect_sum", "queries": [{"kind": "invariant", "disc": "d"}]}, "undeclared disc"),
        ({"manifold": "connect_sum", "queries": [{"kind": "slice"}]}, "unknown query kind"),
        ({"manifold": "connect_sum", "queries": [{"kind": "compare", "discs": ["a"]}]}, "exactly two"),
        ({"manifold": "connect_sum", "queries": [{"kind": "reduce"}]}, "missing required key 'element'"),
        ({"manifold": "connect_sum", "extra": 1}, "unknown key"),
    ],
)
def test_session_schema_errors(obj, fragment):
    with pytest.raises(ValidationError) as excinfo:
        session_from_json(obj)
    assert fragment in str(excinfo.value)


def test_session_error_paths_point_into_document():
    with pytest.raises(ValidationError) as excinfo:
        session_from_json(
            {"manifold": "connect_sum", "discs": {"d": {"sr_discs": [{"sign": 3, "word": "t"}]}}}
        )
    assert "session.discs.d.sr_discs[0].sign" in str(excinfo.value)


def test_execute_matches_manifold_kernel_fuzz():
    rng = random.Random(62)
    for _ in range(50):
        spec = random_spec(rng)
        manifold = ManifoldModel(spec, random_kernel(rng, spec))
        data = random_srdata(rng, spec)
        obj = {
            "manifold": manifold_to_json(manifold),
            "discs": {"d": disc_to_json(data)},
            "queries": [{"kind": "invariant", "disc": "d"}, {"kind": "normalize", "disc": "d"}],
        }
        doc = session_from_json(obj)
        results = execute(doc)
        assert results[0]["value"] == str(phi(data, manifold))
        assert disc_from_json(results[1]["value"], spec) == normalize(data, manifold)
