import re

from fractions import Fraction

from toricsplit.bundle.bundledata import make_bundle_data
from toricsplit.bundle.euler import make_euler_spec
from toricsplit.common.errors import ParseError
from toricsplit.io.fanformat import content_lines, parse_integers
from toricsplit.model.types import EulerBundleSpec, Fan, KaneyamaBundleData

RATIONAL_PATTERN: re.Pattern = re.compile(r'^[+-]?\d+(/\d+)?$')
WEIGHT_PATTERN: re.Pattern = re.compile(r'^\(\s*([^()]*)\s*\)$')


def parse_bundle(text: str, fan: Fan) -> KaneyamaBundleData:
    """Read bundle data against a fan; cone indices in the file are 1-based.

    rank r
    weights <cone>: (w…);(w…)
    pasting <cone2> <cone1>: <r·r rationals, row-major>
    """

    lines: list[tuple[int, str]] = content_lines(text)
    if len(lines) == 0:
        raise ParseError("empty bundle file", 1)

    number, line = lines[0]
    tokens: list[str] = line.split()
    if tokens[0] != 'rank' or len(tokens) != 2:
        raise ParseError("first line must be 'rank r'", number)

    rank: int = parse_integers(tokens[1:], number)[0]
    if rank < 1:
        raise ParseError(f"rank must be positive, got {rank}", number)

    weights: dict[int, list[list[int]]] = dict()
    pastings: dict[tuple[int, int], list[list[Fraction]]] = dict()
    for number, line in lines[1:]:
        if ':' not in line:
            raise ParseError("expected '<keyword> <cones>: <values>'", number)

        head, body = line.split(':', 1)
        head_tokens: list[str] = head.split()
        if len(head_tokens) == 0:
            raise ParseError("expected '<keyword> <cones>: <values>'", number)

        keyword: str = head_tokens[0]

        if keyword == 'weights':
            if len(head_tokens) != 2:
                raise ParseError("expected 'weights <cone>:'", number)

            sigma: int = _cone_index(head_tokens[1], fan, number)
            if sigma in weights:
                raise ParseError(f"weights of cone {sigma + 1} given twice", number)

            weights[sigma] = [_parse_weight(w, fan.dim, number) for w in body.split(';')]
            if len(weights[sigma]) != rank:
                raise ParseError(f"expected {rank} weights, got {len(weights[sigma])}", number)

        elif keyword == 'pasting':
            if len(head_tokens) != 3:
                raise ParseError("expected 'pasting <cone2> <cone1>:'", number)

            key: tuple[int, int] = (_cone_index(head_tokens[1], fan, number), _cone_index(head_tokens[2], fan, number))
            if key in pastings:
                raise ParseError(f"pasting ({key[0] + 1},{key[1] + 1}) given twice", number)

            entries: list[Fraction] = [_parse_rational(t, number) for t in body.split()]
            if len(entries) != rank * rank:
                raise ParseError(f"expected {rank * rank} entries, got {len(entries)}", number)

            pastings[key] = [entries[i * rank:(i + 1) * rank] for i in range(rank)]

        else:
            raise ParseError(f"unknown keyword {keyword!r}", number)

    missing: list[int] = [sigma + 1 for sigma in range(fan.num_cones) if sigma not in weights]
    if len(missing) > 0:
        raise ParseError(f"weights missing for cones {missing}")

    return make_bundle_data(fan, rank, [weights[sigma] for sigma in range(fan.num_cones)], pastings)

def dump_bundle(data: KaneyamaBundleData) -> str:
    lines: list[str] = [f"rank {data.rank}"]
    for sigma, system in enumerate(data.weight_systems):
        lines.append(f"weights {sigma + 1}: " + ';'.join(f"({','.join(str(x) for x in w)})" for w in system))

    for (sigma2, sigma1), matrix in sorted(data.pastings.items()):
        lines.append(f"pasting {sigma2 + 1} {sigma1 + 1}: " + ' '.join(str(x) for row in matrix for x in row))

    return '\n'.join(lines) + '\n'

def parse_euler(text: str, fan: Fan) -> EulerBundleSpec:
    """One line per summand: 'summand d_1 … d_J section e_1 … e_J'."""

    divisors: list[list[int]] = list()
    exponents: list[list[int]] = list()
    for number, line in content_lines(text):
        tokens: list[str] = line.split()
        if tokens[0] != 'summand' or 'section' not in tokens:
            raise ParseError("expected 'summand <divisor> section <exponents>'", number)

        split: int = tokens.index('section')
        divisor: list[int] = parse_integers(tokens[1:split], number)
        exponent: list[int] = parse_integers(tokens[split + 1:], number)
        if len(divisor) != fan.num_rays or len(exponent) != fan.num_rays:
            raise ParseError(f"divisor and section need {fan.num_rays} entries each", number)

        divisors.append(divisor)
        exponents.append(exponent)

    return make_euler_spec(fan, divisors, exponents)

def dump_euler(spec: EulerBundleSpec) -> str:
    return ''.join(
        f"summand {' '.join(str(x) for x in d)} section {' '.join(str(x) for x in e)}\n"
        for d, e in zip(spec.summand_divisors, spec.section_exponents)
    )

def _cone_index(token: str, fan: Fan, line_number: int) -> int:
    index: int = parse_integers([token], line_number)[0]
    if index < 1 or index > fan.num_cones:
        raise ParseError(f"unknown cone {index}, valid indices are 1..{fan.num_cones}", line_number)

    return index - 1

def _parse_weight(token: str, dim: int, line_number: int) -> list[int]:
    match: re.Match|None = WEIGHT_PATTERN.match(token.strip())
    if match is None:
        raise ParseError(f"expected a weight like (1,0), got {token.strip()!r}", line_number)

    values: list[int] = parse_integers([t.strip() for t in match.group(1).split(',')], line_number)
    if len(values) != dim:
        raise ParseError(f"weight needs {dim} coordinates, got {len(values)}", line_number)

    return values

def _parse_rational(token: str, line_number: int) -> Fraction:
    if RATIONAL_PATTERN.match(token) is None:
        raise ParseError(f"expected an exact rational like 3 or -1/2, got {token!r}", line_number)

    return Fraction(token)
