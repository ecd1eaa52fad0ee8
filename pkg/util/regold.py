import logging
import os
import sys

from click.testing import CliRunner

from toricsplit.__main__ import cli


GOLDEN_RUNS: dict[str, list[str]] = {
    'surfaces_k1.txt': ['surfaces', '--k', '1'],
    'surfaces_k2.tsv': ['surfaces', '--k', '2', '--format', 'tsv'],
    'q_matrix_f1.txt': ['q-matrix', '--graph', '0,1,0,-1'],
    'tangent_cp2.txt': ['tangent-split', '--graph', '1,1,1']
}


def regold(data_dir: str) -> None:
    runner: CliRunner = CliRunner()

    for name, arguments in GOLDEN_RUNS.items():
        result = runner.invoke(cli, arguments)
        if result.exit_code != 0:
            logging.error(f"{' '.join(arguments)} failed with exit code {result.exit_code}, keeping {name}")
            continue

        with open(os.path.join(data_dir, name), 'w', encoding='utf-8') as file:
            file.write(result.stdout)

        logging.info(f"Wrote {name}")


if __name__ == '__main__':
    logging.basicConfig(
        level=logging.INFO,
        format='[%(levelname)s] %(asctime)s %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    target: str = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), '..', 'tests', 'data')
    regold(target)
