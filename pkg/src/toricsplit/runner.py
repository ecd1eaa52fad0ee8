import logging

from concurrent.futures import ThreadPoolExecutor
from time import time

from toricsplit.bundle.bundledata import dual_bundle, tangent_bundle
from toricsplit.bundle.euler import euler_splitting_system
from toricsplit.common.env import max_workers
from toricsplit.io.bundleformat import parse_bundle, parse_euler
from toricsplit.io.fanformat import parse_fan, parse_graph
from toricsplit.io.report import TableRow, render_q, render_splitting_report, render_surfaces, render_table
from toricsplit.model.config import RunConfig
from toricsplit.model.types import AugmentedIntersectionMatrix, Fan, KaneyamaBundleData, SplittingSystem, SplittingType, WeightedCircularGraph
from toricsplit.solver.splittingsolver import SplittingTypeSolver
from toricsplit.splitting.system import splitting_system
from toricsplit.toric.intersection import anticanonical_degree, augmented_matrix
from toricsplit.toric.surfacegraph import enumerate_blowups, graph_to_fan


class Runner:
    """Executes one validated CLI invocation and returns the report text."""

    TABLE_MAX_BLOWUPS: int = 9

    def __init__(self, config: RunConfig) -> None:
        self._config: RunConfig = config
        self._workers: int = max_workers()

    def run(self) -> str:
        logging.info(f"{self.__class__.__name__}: Running {self._config.subcommand} with {self._workers} workers ...")
        start_time: float = time()

        if self._config.subcommand == 'surfaces':
            report: str = self.surfaces()
        elif self._config.subcommand == 'q-matrix':
            report = self.q_matrix()
        elif self._config.subcommand == 'tangent-split':
            report = self.tangent_split()
        elif self._config.subcommand == 'bundle-split':
            report = self.bundle_split()
        else:
            report = self.table41()

        end_time: float = time()
        logging.info(f"{self.__class__.__name__}: {self._config.subcommand} completed after {(end_time - start_time):.3f}s.")

        return report

    def surfaces(self) -> str:
        graphs: list[WeightedCircularGraph] = enumerate_blowups(self._config.k, self._workers)
        return render_surfaces(self._config.k, graphs, self._config.output_format)

    def q_matrix(self) -> str:
        return render_q(augmented_matrix(self._load_fan()), self._config.output_format)

    def tangent_split(self) -> str:
        fan: Fan = self._load_fan()

        data: KaneyamaBundleData = tangent_bundle(fan)
        if self._config.dual:
            data = dual_bundle(data)

        q: AugmentedIntersectionMatrix = augmented_matrix(fan)
        xi: SplittingSystem = splitting_system(data, self._workers)

        return self._split_report(q, xi)

    def bundle_split(self) -> str:
        fan: Fan = parse_fan(self._read(self._config.fan_path))
        q: AugmentedIntersectionMatrix = augmented_matrix(fan)

        if self._config.bundle_path is not None:
            data: KaneyamaBundleData = parse_bundle(self._read(self._config.bundle_path), fan)
            if self._config.dual:
                data = dual_bundle(data)

            xi: SplittingSystem = splitting_system(data, self._workers)
        else:
            xi = euler_splitting_system(parse_euler(self._read(self._config.euler_path), fan), q)
            if self._config.dual:
                xi = SplittingSystem(tuple(tuple(sorted((-d for d in t), reverse=True)) for t in xi.tuples))

        return self._split_report(q, xi)

    def table41(self) -> str:
        candidates: list[tuple[int, WeightedCircularGraph]] = list()
        for k in range(1, self.TABLE_MAX_BLOWUPS + 1):
            for g in enumerate_blowups(k, self._workers):

                # c1 of the second column restricts to the weights themselves
                if all(a >= 0 for a in g.weights) or all(a < 0 for a in g.weights):
                    candidates.append((k, g))

        logging.info(f"{self.__class__.__name__}: {len(candidates)} surfaces pass the weight sign filter.")

        if self._workers > 1:
            with ThreadPoolExecutor(max_workers=self._workers) as executor:
                results: list[list[TableRow]] = list(executor.map(self._table_rows, candidates))
        else:
            results = [self._table_rows(c) for c in candidates]

        rows: list[TableRow] = [row for result in results for row in result]
        return render_table(rows, self._config.output_format)

    def _table_rows(self, candidate: tuple[int, WeightedCircularGraph]) -> list[TableRow]:
        k, g = candidate

        fan: Fan = graph_to_fan(g)
        q: AugmentedIntersectionMatrix = augmented_matrix(fan)
        xi: SplittingSystem = splitting_system(tangent_bundle(fan), workers=1)
        types: list[SplittingType] = SplittingTypeSolver(q, self._config.strict_signs).find(xi)

        degree: int = anticanonical_degree(q)
        if degree > 0:
            remark: str = 'del Pezzo type'
        elif degree == 0:
            remark = 'half K3 type'
        else:
            remark = ''

        # the last two rays are zeroed by the canonical representative
        return [
            TableRow(k, g, tuple(tuple(c[:g.size - 2]) for c in t.canonical), remark) for t in types
        ]

    def _split_report(self, q: AugmentedIntersectionMatrix, xi: SplittingSystem) -> str:
        types: list[SplittingType] = SplittingTypeSolver(q, self._config.strict_signs).find(xi)
        return render_splitting_report(q, xi, types, self._config.output_format)

    def _load_fan(self) -> Fan:
        if self._config.graph is not None:
            return graph_to_fan(parse_graph(self._config.graph))

        return parse_fan(self._read(self._config.fan_path))

    def _read(self, path: str) -> str:
        with open(path, 'r', encoding='utf-8') as file:
            return file.read()
