import re

from toricsplit.common.errors import ParseError
from toricsplit.model.serialization import deserialize, serialize
from toricsplit.model.types import Fan, WeightedCircularGraph
from toricsplit.toric.fan import make_fan

INTEGER_PATTERN: re.Pattern = re.compile(r'^[+-]?\d+$')


def content_lines(text: str) -> list[tuple[int, str]]:
    """Non-empty lines with '#' comments removed, paired with 1-based line numbers."""

    result: list[tuple[int, str]] = list()
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if line != '':
            result.append((number, line))

    return result

def parse_integers(tokens: list[str], line_number: int) -> list[int]:
    for token in tokens:
        if INTEGER_PATTERN.match(token) is None:
            raise ParseError(f"expected an integer, got {token!r}", line_number)

    return [int(t) for t in tokens]

def parse_fan(text: str) -> Fan:
    lines: list[tuple[int, str]] = content_lines(text)
    if len(lines) == 0:
        raise ParseError("empty fan file", 1)

    number, line = lines[0]
    tokens: list[str] = line.split()
    if tokens[0] != 'dim' or len(tokens) != 2:
        raise ParseError("first line must be 'dim n'", number)

    dim: int = parse_integers(tokens[1:], number)[0]

    rays: list[list[int]] = list()
    cones: list[list[int]] = list()
    for number, line in lines[1:]:
        tokens = line.split()
        keyword: str = tokens[0]

        if keyword == 'ray':
            if len(cones) > 0:
                raise ParseError("rays must precede cones", number)

            values: list[int] = parse_integers(tokens[1:], number)
            if len(values) != dim:
                raise ParseError(f"ray needs {dim} coordinates, got {len(values)}", number)

            rays.append(values)

        elif keyword == 'cone':
            values = parse_integers(tokens[1:], number)
            if len(values) != dim:
                raise ParseError(f"cone needs {dim} ray indices, got {len(values)}", number)

            if any(i < 1 or i > len(rays) for i in values):
                raise ParseError(f"cone refers to unknown ray, valid indices are 1..{len(rays)}", number)

            cones.append([i - 1 for i in values])

        else:
            raise ParseError(f"unknown keyword {keyword!r}", number)

    record: Fan = deserialize(Fan, {'dim': dim, 'rays': rays, 'max_cones': cones})
    return make_fan(record.dim, record.rays, record.max_cones)

def dump_fan(fan: Fan) -> str:
    record: dict = serialize(fan)

    lines: list[str] = [f"dim {record['dim']}"]
    lines.extend(f"ray {' '.join(str(x) for x in ray)}" for ray in record['rays'])
    lines.extend(f"cone {' '.join(str(i + 1) for i in cone)}" for cone in record['max_cones'])

    return '\n'.join(lines) + '\n'

def parse_graph(text: str) -> WeightedCircularGraph:
    tokens: list[str] = [t.strip() for t in text.split(',')]
    if len(tokens) < 3:
        raise ParseError(f"graph needs at least 3 comma-separated weights, got {text!r}")

    return WeightedCircularGraph(tuple(parse_integers(tokens, 1)))
