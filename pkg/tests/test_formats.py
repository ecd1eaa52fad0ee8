import pytest

from toricsplit.bundle.bundledata import cp2_rank2, tangent_bundle
from toricsplit.bundle.euler import euler_bundle
from toricsplit.common.errors import BundleDataError, FanError, ParseError
from toricsplit.io.bundleformat import dump_bundle, dump_euler, parse_bundle, parse_euler
from toricsplit.io.fanformat import dump_fan, parse_fan, parse_graph
from toricsplit.model.types import WeightedCircularGraph
from toricsplit.splitting.system import splitting_system
from toricsplit.toric.fan import projective_space_fan
from toricsplit.toric.surfacegraph import graph_to_fan, hirzebruch

CP2_FAN = """
# projective plane
dim 2
ray 1 0
ray 0 1
ray -1 -1
cone 1 2
cone 1 3
cone 2 3
"""


def test_parse_fan():

    assert parse_fan(CP2_FAN) == projective_space_fan(2)

    fan = graph_to_fan(hirzebruch(2))
    assert parse_fan(dump_fan(fan)) == fan


@pytest.mark.parametrize('text,line,message', [
    ('', 1, 'empty'),
    ('dimension 2\n', 1, "'dim n'"),
    ('dim 2\nray 1 0\nray 0 x\n', 3, 'integer'),
    ('dim 2\nray 1 0\ncone 1 2\n', 3, 'unknown ray'),
    ('dim 2\nray 1 0\ncone 1 1\nray 0 1\n', 4, 'precede'),
    ('dim 2\n\n# comment\nray 1 0 0\n', 4, 'coordinates'),
    ('dim 2\nedge 1 2\n', 2, 'unknown keyword'),
])
def test_parse_fan_errors(text, line, message):

    with pytest.raises(ParseError, match=message) as info:
        parse_fan(text)

    assert info.value.line_number == line
    assert str(info.value).startswith(f"line {line}: ")


def test_parse_fan_rejects_invalid_geometry():

    with pytest.raises(FanError):
        parse_fan('dim 2\nray 1 0\nray 0 1\nray -1 -1\ncone 1 2\ncone 2 3\n')


def test_parse_graph():

    assert parse_graph('0, 2,0,-2') == WeightedCircularGraph((0, 2, 0, -2))

    with pytest.raises(ParseError):
        parse_graph('1,1')

    with pytest.raises(ParseError):
        parse_graph('1,a,1')


def test_bundle_file():

    fan = projective_space_fan(2)
    data = cp2_rank2(1, 2, 3)

    parsed = parse_bundle(dump_bundle(data), fan)
    assert parsed == data
    assert splitting_system(parsed) == splitting_system(data)


def test_bundle_file_with_fractions():

    fan = projective_space_fan(2)
    text = dump_bundle(tangent_bundle(fan))

    assert parse_bundle(text, fan).weight_systems == tangent_bundle(fan).weight_systems

    with pytest.raises(ParseError, match='exact rational') as info:
        parse_bundle(text.replace('pasting 1 2: ', 'pasting 1 2: 0.5 '), fan)

    assert info.value.line_number == 5


@pytest.mark.parametrize('text,line,message', [
    ('weights 1: (1,0);(0,1)\n', 1, "'rank r'"),
    ('rank 2\nweights 4: (1,0);(0,1)\n', 2, 'unknown cone'),
    ('rank 2\nweights 1: (1,0)\n', 2, 'expected 2 weights'),
    ('rank 2\nweights 1: (1,0,0);(0,1)\n', 2, 'coordinates'),
    ('rank 2\nweights 1: (1,0);(0,1)\nweights 1: (1,0);(0,1)\n', 3, 'twice'),
    ('rank 2\npasting 1 2: 1 0 0\n', 2, 'expected 4 entries'),
    ('rank 2\nframe 1: 1\n', 2, 'unknown keyword'),
    ('rank 2\n: (1,0);(0,1)\n', 2, 'expected'),
])
def test_parse_bundle_errors(text, line, message):

    with pytest.raises(ParseError, match=message) as info:
        parse_bundle(text, projective_space_fan(2))

    assert info.value.line_number == line


def test_parse_bundle_reports_violations():

    fan = projective_space_fan(2)
    text = dump_bundle(tangent_bundle(fan)).replace('weights 1: (0,1);(1,0)', 'weights 1: (0,1);(2,0)')

    with pytest.raises(BundleDataError) as info:
        parse_bundle(text, fan)

    assert len(info.value.violations) > 0


def test_euler_file():

    fan = graph_to_fan(hirzebruch(1))
    spec = euler_bundle(fan, (1, 2, 1, 2))

    assert parse_euler(dump_euler(spec), fan) == spec

    with pytest.raises(ParseError, match='4 entries') as info:
        parse_euler('summand 1 0 0 0 section 1 0 0 0\nsummand 1 0 section 1 0\n', fan)

    assert info.value.line_number == 2
