"""
CLI commands for the uncover workbench.
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import click
import numpy as np

from .engine import REALIZATION_COLUMNS, run, sample_uncover_times, write_realization_csv
from .engine.paths import check_domain
from .ensemble import (EnsembleStats, TabulatedCovariance, brute_force_oracle, compare, covariance_frame,
                       dump_json, load_experiment_config, run_ensemble, write_covariance_csv)
from .errors import RUNTIME_EXIT, USAGE_EXIT, ConfigError, UncoverError
from .generators import ModelKind, Offspring, generate, model_spec
from .graph import edge_list_text, read_edge_list, triangle_census, write_edge_list
from .limits import (COMPONENT_FPRIME, EDGE_FPRIME, CovarianceKind, CovarianceModel, derandomize, plugin_model,
                     randomize, theory_model)
from .martingales import martingale_paths

logger = logging.getLogger(__name__)

COMPARE_FAIL_EXIT = 1
MARTINGALE_COLUMNS = ('Q', 'S', 'Nbar', 'R', 'Qt', 'St', 'Nt', 'Rt')
FPRIMES = {'edges': EDGE_FPRIME, 'components': COMPONENT_FPRIME}


def _settings():
    return click.get_current_context().find_root().obj


def _parse_grid(text: Optional[str]) -> List[float]:
    if text is None:
        return list(_settings().DEFAULT_GRID)
    try:
        grid = [float(x) for x in text.split(',') if x.strip()]
    except ValueError as e:
        raise click.BadParameter(f"grid must be comma-separated numbers: {text!r}") from e
    if not grid:
        raise click.BadParameter("grid must not be empty")
    check_domain(grid)
    return grid


def _parse_params(items: Sequence[str]) -> Dict[str, float]:
    params = {}
    pairs = [p for item in items for p in item.split(',') if p.strip()]
    for pair in pairs:
        key, sep, value = pair.partition('=')
        if not sep:
            raise click.BadParameter(f"expected key=value, got {pair!r}")
        try:
            params[key.strip()] = float(value)
        except ValueError as e:
            raise click.BadParameter(f"parameter {key!r} needs a number, got {value!r}") from e
    return params


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text)


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path} is not valid JSON: {e}") from e


@click.command()
@click.option('--model', 'kind', required=True, type=click.Choice([k.value for k in ModelKind]),
              help='Graph model')
@click.option('--n', 'n', required=True, type=int, help='Number of vertices')
@click.option('--seed', default=0, show_default=True, type=click.IntRange(min=0), help='Random seed')
@click.option('--out', type=click.Path(dir_okay=False), help='Edge-list file (standard output if omitted)')
@click.option('--m', 'm', type=int, help='Edge count of gnm')
@click.option('--p', 'p', type=float, help='Edge probability of gnp')
@click.option('--offspring', type=click.Choice([o.value for o in Offspring]), help='Offspring law of cond_gw')
@click.option('--degrees', help='Comma-separated degree list of config_model')
@click.option('--design', type=click.Choice(['regular', 'two_level', 'hubs']), help='Degree design of config_model')
@click.option('--d', 'd', type=int, help='Degree of the regular design')
@click.option('--a', 'a', type=int, help='Centre of the two_level design')
@click.option('--b', 'b', type=int, help='Half-spread of the two_level design')
@click.option('--delta', type=float, help='Hub fraction of the hubs design')
@click.option('--matching', default='reject', show_default=True, type=click.Choice(['reject', 'repair']),
              help='Configuration-model matching policy')
@click.option('--cycle-length', type=int, help='Cycle length of cycle_with_isolated')
def generate_cmd(kind, n, seed, out, m, p, offspring, degrees, design, d, a, b, delta, matching, cycle_length):
    """Draw one graph and write it as an edge list ("n m" then one "u v" line per edge)."""
    fields = {'kind': kind, 'n': n, 'm': m, 'p': p, 'offspring': offspring, 'matching': matching,
              'cycle_length': cycle_length}
    if degrees is not None:
        try:
            fields['degrees'] = [int(x) for x in degrees.split(',') if x.strip()]
        except ValueError as e:
            raise click.BadParameter(f"degrees must be comma-separated integers: {degrees!r}") from e
    if design is not None:
        recipe = {'kind': design, 'd': d, 'a': a, 'b': b, 'delta': delta}
        fields['design'] = {k: v for k, v in recipe.items() if v is not None}
    spec = model_spec(**{k: v for k, v in fields.items() if v is not None})

    settings = _settings()
    graph = generate(spec, np.random.default_rng(seed), config_cap=settings.CONFIG_REJECTION_CAP,
                     gw_cap=settings.GW_REJECTION_CAP)
    if out is None:
        click.echo(edge_list_text(graph), nl=False)
    else:
        write_edge_list(graph, out)
        logger.info(f"Wrote {graph!r} to {out}")


@click.command()
@click.option('--graph', 'graph_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Edge-list file')
@click.option('--seed', default=0, show_default=True, type=click.IntRange(min=0), help='Random seed')
@click.option('--out', type=click.Path(dir_okay=False), help='CSV file (standard output if omitted)')
@click.option('--martingales', is_flag=True, help='Add columns Q,S,Nbar,R,Qt,St,Nt,Rt')
@click.option('--triangles/--no-triangles', default=True, show_default=True, help='Track visible triangles')
def simulate(graph_path, seed, out, martingales, triangles):
    """
    Uncover a graph once and write the realization as CSV.

    Columns: event_time,L,N,K,T and, with --martingales, Q,S,Nbar,R,Qt,St,Nt,Rt.
    The first row is t=0; each later row is the state right after one uncovering.
    """
    graph = read_edge_list(graph_path)
    assignment = sample_uncover_times(graph.n, np.random.default_rng(seed))
    census = triangle_census(graph) if triangles else None
    realization = run(graph, assignment, track_triangles=triangles, census=census)
    frame = realization.to_frame()[list(REALIZATION_COLUMNS)]

    if martingales:
        paths = martingale_paths(graph, assignment)
        times = frame['event_time'].to_numpy()
        for column in MARTINGALE_COLUMNS:
            frame[column] = getattr(paths, column).evaluate(times)

    if out is None:
        click.echo(frame.to_csv(index=False, float_format='%.17g'), nl=False)
    else:
        write_realization_csv(frame, out)


@click.command()
@click.option('--regime', 'kind', required=True, type=click.Choice([k.value for k in CovarianceKind]),
              help='Covariance kind')
@click.option('--params', '--param', 'params', multiple=True,
              help='Model parameters as key=value, comma-separated or repeated')
@click.option('--grid', help='Comma-separated times (default 0.1,...,0.9)')
@click.option('--derandomize', 'derandomize_c', type=float, help='Move to the discrete clock with this c')
@click.option('--randomize', 'randomize_c', type=float, help='Move to the continuous clock with this c')
@click.option('--fprime', default='edges', show_default=True, type=click.Choice(sorted(FPRIMES)),
              help="Centering derivative used by the clock change")
@click.option('--out', type=click.Path(dir_okay=False), help='Covariance CSV (standard output if omitted)')
@click.option('--model-out', type=click.Path(dir_okay=False), help='Also write the model as JSON')
def theory(kind, params, grid, derandomize_c, randomize_c, fprime, out, model_out):
    """
    Evaluate a limit covariance on a grid.

    The CSV has a header "s,<t1>,<t2>,..." and one row per grid time s.
    """
    model = theory_model(kind, _parse_params(params))
    if derandomize_c is not None:
        model = derandomize(model, derandomize_c, FPRIMES[fprime])
    if randomize_c is not None:
        model = randomize(model, randomize_c, FPRIMES[fprime])

    times = _parse_grid(grid)
    frame = covariance_frame(times, model.covariance_matrix(times))
    if out is None:
        click.echo(frame.to_csv(float_format='%.17g'), nl=False)
    else:
        write_covariance_csv(frame, out)
    if model_out is not None:
        dump_json(model.to_dict(), model_out)


@click.command()
@click.option('--config', 'config_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Experiment configuration (JSON)')
@click.option('--workers', type=click.IntRange(min=1), help='Worker processes (default: machine parallelism)')
def ensemble(config_path, workers):
    """
    Run a Monte Carlo ensemble and write its statistics JSON.

    With a theory block the comparison report is written too, and the exit
    code is 1 when the comparison fails.
    """
    settings = _settings()
    cfg = load_experiment_config(config_path)
    for target in (cfg.output.stats, cfg.output.covariance_csv, cfg.output.report):
        if target is not None:
            Path(target).parent.mkdir(parents=True, exist_ok=True)
    stats = run_ensemble(
        cfg.experiment,
        workers=workers or settings.DEFAULT_WORKERS,
        chunk_size=settings.CHUNK_SIZE,
        jackknife_blocks=settings.JACKKNIFE_BLOCKS,
        config_cap=settings.CONFIG_REJECTION_CAP,
        gw_cap=settings.GW_REJECTION_CAP,
    )
    _emit(dump_json(stats.to_dict()), cfg.output.stats)
    if cfg.output.covariance_csv is not None:
        write_covariance_csv(stats.covariance_frame(), cfg.output.covariance_csv)

    if cfg.theory is None:
        return 0
    block = cfg.theory
    model = plugin_model(block.kind, stats.plugin, overrides=block.params)
    report = compare(
        stats, model,
        abs_tol=settings.ABS_TOL if block.abs_tol is None else block.abs_tol,
        z_tol=settings.Z_TOL if block.z_tol is None else block.z_tol,
        rel_tol=settings.REL_TOL if block.rel_tol is None else block.rel_tol,
        skew_limit=settings.SKEW_LIMIT,
        kurt_limit=settings.KURT_LIMIT,
    )
    payload = dict(report.to_dict(), model=model.to_dict())
    if cfg.output.report is not None:
        dump_json(payload, cfg.output.report)
    else:
        click.echo(dump_json(payload), nl=False)
    return 0 if report.passed else COMPARE_FAIL_EXIT


@click.command(name='compare')
@click.option('--stats', 'stats_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Ensemble statistics JSON')
@click.option('--theory', 'theory_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Model JSON or covariance CSV')
@click.option('--abs-tol', type=float, help='Absolute tolerance per cell')
@click.option('--z-tol', type=float, help='Standard-error multiple per cell')
@click.option('--rel-tol', type=float, help='Relative tolerance per cell')
@click.option('--out', type=click.Path(dir_okay=False), help='Report JSON (standard output if omitted)')
def compare_cmd(stats_path, theory_path, abs_tol, z_tol, rel_tol, out):
    """Compare ensemble statistics with a limit model; exit 1 when a tolerance fails."""
    settings = _settings()
    try:
        stats = EnsembleStats.from_dict(_read_json(stats_path))
    except (KeyError, TypeError) as e:
        raise ConfigError(f"{stats_path} is not an ensemble statistics file: {e}") from e
    if theory_path.lower().endswith('.csv'):
        model = TabulatedCovariance.read_csv(theory_path)
    else:
        model = CovarianceModel.from_dict(_read_json(theory_path))

    report = compare(
        stats, model,
        abs_tol=settings.ABS_TOL if abs_tol is None else abs_tol,
        z_tol=settings.Z_TOL if z_tol is None else z_tol,
        rel_tol=settings.REL_TOL if rel_tol is None else rel_tol,
        skew_limit=settings.SKEW_LIMIT,
        kurt_limit=settings.KURT_LIMIT,
    )
    _emit(dump_json(report.to_dict()), out)
    return 0 if report.passed else COMPARE_FAIL_EXIT


@click.command()
@click.option('--graph', 'graph_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Edge-list file')
@click.option('--k', 'k', required=True, type=int, help='Number of uncovered vertices')
def oracle(graph_path, k):
    """Exact mean and variance of the visible edge and component counts after k steps."""
    graph = read_edge_list(graph_path)
    moments = brute_force_oracle(graph, k, max_n=_settings().ORACLE_MAX_N)
    click.echo(dump_json(moments.to_dict()), nl=False)


def register_commands(app: click.Group) -> None:
    """Register the workbench commands with the application group."""
    app.add_command(generate_cmd, name='generate')
    app.add_command(simulate)
    app.add_command(theory)
    app.add_command(ensemble)
    app.add_command(compare_cmd, name='compare')
    app.add_command(oracle)


def execute(argv: Optional[Sequence[str]] = None, config_name: Optional[str] = None) -> int:
    """
    Run one command line and return its exit code.

    0 success, 1 comparison failure, 2 usage or configuration error,
    3 runtime error. Errors are printed to standard error prefixed "error:".
    """
    from . import create_app

    app = create_app(config_name)
    try:
        result = app.main(args=list(argv) if argv is not None else None, prog_name='uncover',
                          standalone_mode=False)
    except UncoverError as e:
        logger.debug(f"{type(e).__name__}: {e}")
        click.echo(f"error: {e}", err=True)
        return e.exit_code
    except click.exceptions.Abort:
        click.echo("error: aborted", err=True)
        return USAGE_EXIT
    except click.ClickException as e:
        click.echo(f"error: {e.format_message()}", err=True)
        return USAGE_EXIT
    except OSError as e:
        click.echo(f"error: {e}", err=True)
        return RUNTIME_EXIT
    except Exception as e:
        logger.exception(f"Unexpected failure: {e}")
        click.echo(f"error: {type(e).__name__}: {e}", err=True)
        return RUNTIME_EXIT
    return result if isinstance(result, int) else 0
