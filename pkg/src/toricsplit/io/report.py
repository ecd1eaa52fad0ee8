from dataclasses import dataclass
from typing import Sequence

from toricsplit.linear.intmatrix import IntVector
from toricsplit.model.types import AugmentedIntersectionMatrix, SplittingSystem, SplittingType, WeightedCircularGraph

TEXT: str = 'text'
TSV: str = 'tsv'


@dataclass(frozen=True)
class TableRow:
    k: int
    graph: WeightedCircularGraph
    columns: tuple[IntVector, ...]
    remark: str


def join(values: Sequence[int], separator: str = ' ') -> str:
    return separator.join(str(x) for x in values)

def render_surfaces(k: int, graphs: Sequence[WeightedCircularGraph], output_format: str) -> str:
    if output_format == TSV:
        lines: list[str] = ['k\tweights']
        lines.extend(f"{k}\t{g}" for g in graphs)
    else:
        lines = [f"surfaces k={k} count={len(graphs)}"]
        lines.extend(str(g) for g in graphs)

    return '\n'.join(lines) + '\n'

def render_q(q: AugmentedIntersectionMatrix, output_format: str) -> str:
    if output_format == TSV:
        lines: list[str] = ['wall\ttau\t' + '\t'.join(f"v{j + 1}" for j in q.col_rays)]
        for i, (wall, row) in enumerate(zip(q.row_walls, q.q.entries)):
            lines.append(f"{i + 1}\t{join([k + 1 for k in wall.tau], ',')}\t{join(row, chr(9))}")
    else:
        lines = [f"Q: {q.q.rows} walls x {q.q.cols} rays"]
        for i, (wall, row) in enumerate(zip(q.row_walls, q.q.entries)):
            lines.append(f"tau({i + 1}) {{{join([k + 1 for k in wall.tau], ',')}}}: {join(row)}")

    return '\n'.join(lines) + '\n'

def render_splitting_report(q: AugmentedIntersectionMatrix, xi: SplittingSystem, types: Sequence[SplittingType], output_format: str) -> str:
    if output_format == TSV:
        return _render_splitting_tsv(xi, types)

    lines: list[str] = [render_q(q, TEXT).rstrip('\n'), 'splitting numbers:', str(xi), f"splitting types: {len(types)}"]
    if len(types) == 0:
        lines.append('no splitting type')

    for t, splitting_type in enumerate(types, start=1):
        lines.append(f"type {t} (permutation {splitting_type.permutation_id})")
        lines.append(f"  R': {' | '.join(join(row) for row in splitting_type.r_prime.entries)}")
        for l, (column, canonical, sign) in enumerate(zip(splitting_type.columns, splitting_type.canonical, splitting_type.sign_classes), start=1):
            lines.append(f"  X{l}: {join(column)} -> {join(canonical)} [{sign.value}]")

    return '\n'.join(lines) + '\n'

def render_table(rows: Sequence[TableRow], output_format: str) -> str:
    if output_format == TSV:
        lines: list[str] = ['k\tweights\tcolumns\tremark']
        lines.extend(f"{r.k}\t{r.graph}\t{_columns(r.columns)}\t{r.remark}" for r in rows)
    else:
        lines = [f"table: {len(rows)} surfaces"]
        lines.extend(f"k={r.k} w={r.graph} type={_columns(r.columns)} {r.remark}" for r in rows)

    return '\n'.join(lines) + '\n'

def _render_splitting_tsv(xi: SplittingSystem, types: Sequence[SplittingType]) -> str:
    lines: list[str] = ['section\twall\ttype\tcolumn\tvalues\tcanonical\tsign']
    for i, t in enumerate(xi.tuples, start=1):
        lines.append(f"xi\t{i}\t\t\t{join(t, ',')}\t\t")

    for t, splitting_type in enumerate(types, start=1):
        for l, (column, canonical, sign) in enumerate(zip(splitting_type.columns, splitting_type.canonical, splitting_type.sign_classes), start=1):
            lines.append(f"type\t\t{t}\t{l}\t{join(column, ',')}\t{join(canonical, ',')}\t{sign.value}")

    return '\n'.join(lines) + '\n'

def _columns(columns: Sequence[IntVector]) -> str:
    return ';'.join(f"({join(c, ',')})" for c in columns)
