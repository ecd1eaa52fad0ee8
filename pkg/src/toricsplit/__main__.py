import click
import logging
import sys

from click.exceptions import NoArgsIsHelpError
from pydantic import ValidationError

from toricsplit.common.env import is_debug
from toricsplit.model.config import RunConfig
from toricsplit.runner import Runner


def configure_logging() -> None:

    # set logging default configuration, reports go to stdout and logs to stderr
    logging.basicConfig(
        format="[%(levelname)s] %(asctime)s %(message)s",
        level=logging.DEBUG if is_debug() else logging.INFO,
        stream=sys.stderr,
        force=True
    )

def run(**options) -> None:

    configure_logging()

    try:
        config: RunConfig = RunConfig(**options)
        runner: Runner = Runner(config)
        click.echo(runner.run(), nl=False)
    except ValidationError as ex:
        reasons: str = '; '.join(error['msg'] for error in ex.errors())
        logging.error(f"{ex.__class__.__name__}: {reasons}")
        sys.exit(1)
    except Exception as ex:
        if is_debug():
            logging.exception(ex)
        else:
            logging.error(f"{ex.__class__.__name__}: {ex}")

        sys.exit(1)


format_option = click.option('--format', 'output_format', type=click.Choice(['text', 'tsv']), default='text', help='Output format.')
strict_option = click.option('--strict-signs', is_flag=True, default=False, help='Accept only all positive, all zero or all negative columns.')
fan_option = click.option('--fan', 'fan_path', type=click.Path(exists=True, dir_okay=False), default=None, help='Fan text file.')
graph_option = click.option('--graph', default=None, help='Weighted circular graph as comma-separated weights.')


class SingleLineErrorGroup(click.Group):
    """Reports usage errors as one log line and exit status 1."""

    def main(self, *args, **kwargs):
        kwargs['standalone_mode'] = False

        try:
            return super().main(*args, **kwargs)
        except NoArgsIsHelpError as ex:
            ex.show()
            sys.exit(ex.exit_code)
        except click.ClickException as ex:
            configure_logging()
            logging.error(f"{ex.__class__.__name__}: {ex.format_message()}")
            sys.exit(1)
        except click.Abort:
            configure_logging()
            logging.error("Aborted")
            sys.exit(1)


@click.group(cls=SingleLineErrorGroup)
def cli():
    pass

@cli.command()
@click.option('--k', type=int, required=True, help='Number of blowups of CP2.')
@format_option
def surfaces(k: int, output_format: str):
    run(subcommand='surfaces', k=k, output_format=output_format)

@cli.command('q-matrix')
@fan_option
@graph_option
@format_option
def q_matrix(fan_path: str|None, graph: str|None, output_format: str):
    run(subcommand='q-matrix', fan_path=fan_path, graph=graph, output_format=output_format)

@cli.command('tangent-split')
@fan_option
@graph_option
@click.option('--dual', is_flag=True, default=False, help='Use the cotangent bundle.')
@strict_option
@format_option
def tangent_split(fan_path: str|None, graph: str|None, dual: bool, strict_signs: bool, output_format: str):
    run(subcommand='tangent-split', fan_path=fan_path, graph=graph, dual=dual, strict_signs=strict_signs, output_format=output_format)

@cli.command('bundle-split')
@fan_option
@click.option('--bundle', 'bundle_path', type=click.Path(exists=True, dir_okay=False), default=None, help='Bundle data text file.')
@click.option('--euler', 'euler_path', type=click.Path(exists=True, dir_okay=False), default=None, help='Euler sequence text file.')
@click.option('--dual', is_flag=True, default=False, help='Use the dual bundle.')
@strict_option
@format_option
def bundle_split(fan_path: str|None, bundle_path: str|None, euler_path: str|None, dual: bool, strict_signs: bool, output_format: str):
    run(subcommand='bundle-split', fan_path=fan_path, bundle_path=bundle_path, euler_path=euler_path, dual=dual, strict_signs=strict_signs, output_format=output_format)

@cli.command()
@strict_option
@format_option
def table41(strict_signs: bool, output_format: str):
    run(subcommand='table41', strict_signs=strict_signs, output_format=output_format)


if __name__ == '__main__':
    cli()
