#      Minorforge builds dense minors of graphs with no independent set of size three.
#      Copyright (C) 2025 mldchan
#
#      This program is free software: you can redistribute it and/or modify
#      it under the terms of the GNU Affero General Public License as
#      published by the Free Software Foundation, either version 3 of the
#      License, or (at your option) any later version.
#
#      This program is distributed in the hope that it will be useful,
#      but WITHOUT ANY WARRANTY; without even the implied warranty of
#      MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#      GNU Affero General Public License for more details.
#
#      You should have received a copy of the GNU Affero General Public License
#      along with this program.  If not, see <https://www.gnu.org/licenses/>.
#

"""The command line's subcommands. Each returns run records for main to print."""

import logging
import time
from pathlib import Path

from features import alpha2_analysis, bound_math, generators, minor_pipeline, monte_carlo
from features.seagull_packing import seagull_partition
from utils.errors import NotCertifiable, ParseError, UnknownName
from utils.graph import Graph, read_graph, vertex_set, write_graph
from utils.records import RunRecord, hash_bytes
from utils.rng import stream

FAMILIES = ("tfp", "c5blowup", "two-clique", "random")


def load_graph(path: str) -> tuple[Graph, str]:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"{path} is not text") from e
    g = read_graph(text)
    logging.info("Loaded %s: %d vertices, %d edges", path, g.vertex_count, g.edge_count)
    return g, hash_bytes(data)


def _require(value, flag: str, family: str):
    if value is None:
        raise ParseError(f"--{flag} is required for --family {family}")
    if value < 1:
        raise ParseError(f"--{flag} must be at least 1, got {value}")
    return value


def _generate(family: str | None, name: str | None, n: int | None, t: int | None, s: int | None, keep: float,
              seed: int) -> tuple[Graph, dict]:
    if name is not None:
        g = generators.named(name)
        config = {"named": name}
    elif family == "tfp":
        g = generators.gen_tfp_complement(_require(n, "n", family), stream(seed))
        config = {"family": family, "n": n}
    elif family == "c5blowup":
        g = generators.gen_c5_blowup_complement(_require(t, "t", family))
        config = {"family": family, "t": t}
    elif family == "two-clique":
        g = generators.two_clique_complement(_require(s, "s", family), _require(t, "t", family))
        config = {"family": family, "s": s, "t": t}
    elif family == "random":
        g = generators.gen_random_alpha2(_require(n, "n", family), stream(seed), keep)
        config = {"family": family, "n": n, "keep": keep}
    else:
        raise UnknownName(f"unknown family {family!r}, known: {', '.join(FAMILIES)}")
    return g, config


def cmd_gen(family: str | None = None, name: str | None = None, n: int | None = None, t: int | None = None,
            s: int | None = None, keep: float = 0.7, seed: int = 0) -> tuple[str, RunRecord]:
    """Graph file text and its run record."""
    try:
        g, config = _generate(family, name, n, t, s, keep, seed)
    except ValueError as e:
        raise ParseError(str(e)) from e

    text = write_graph(g, comments=[f"{k}={v}" for k, v in sorted(config.items())] + [f"seed={seed}"])
    record = RunRecord("gen", seed, config, outputs={
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "sha256": hash_bytes(text.encode()),
    })
    return text, record


def cmd_analyze(path: str, k: int | None = None) -> RunRecord:
    g, digest = load_graph(path)
    report = alpha2_analysis.analyze(g, k)
    return RunRecord("analyze", None, {"k": k}, {"graph": digest}, report)


def cmd_partition(path: str) -> RunRecord:
    g, digest = load_graph(path)
    partition = seagull_partition(g)
    return RunRecord("partition", None, {}, {"graph": digest}, {
        "seagulls": len(partition.triples),
        "partition": partition.format().splitlines(),
    })


def _parse_clique(text: str | None) -> int | None:
    if text is None:
        return None
    try:
        return vertex_set(int(v) - 1 for v in text.replace(",", " ").split())
    except ValueError as e:
        raise ParseError(f"bad clique {text!r}") from e


def cmd_build_minor(path: str, seed: int = 0, lambda_policy: str = "n23", mode: str = "strict", trials: int = 1,
                    jobs: int = 1, clique: str | None = None, out: str | None = None) -> list[RunRecord]:
    g, digest = load_graph(path)
    cfg = minor_pipeline.PipelineConfig(lambda_policy=lambda_policy, seed=seed, mode=mode)
    config = {"lambda": lambda_policy, "mode": mode, "trials": trials}
    inputs = {"graph": digest}
    known = _parse_clique(clique)

    results = minor_pipeline.run_batch(g, cfg, trials, jobs, known)
    records = []
    certify_on = []
    for result in results:
        if isinstance(result, minor_pipeline.OddPipelineResult):
            outputs = result.inner.scalars()
            outputs.update(h_vertices=result.h.vertex_count, h_edges=result.h.edge_count,
                           missing_edges=result.missing_edges, added_vertex=result.added_vertex + 1)
            certify_on.append(result.inner)
        else:
            outputs = result.scalars()
            certify_on.append(result)
        records.append(RunRecord("build-minor", seed, config, inputs, outputs))
    first_h, first_d = results[0].h, results[0].decomposition

    try:
        certificate = minor_pipeline.certify(certify_on).as_dict()
    except NotCertifiable as e:
        certificate = {"status": "NotCertifiable", "reason": str(e)}
    records.append(RunRecord("build-minor", seed, config, inputs, {"certificate": certificate}))

    if out is not None:
        Path(f"{out}.h.graph").write_text(write_graph(first_h, comments=[f"minor of {path}", f"seed={seed}"]))
        Path(f"{out}.branch").write_text(first_d.format())
        logging.info("Wrote %s.h.graph and %s.branch", out, out)
    return records


def cmd_mc(suite: str, trials: int | None = None, seed: int = 0, jobs: int = 1) -> list[RunRecord]:
    records = []
    for item in monte_carlo.run_suite(suite, trials, seed, jobs):
        if item.passed is False:
            logging.warning("%s: %s did not pass (%s)", suite, item.quantity, item.note)
        records.append(RunRecord("mc", seed, {"suite": suite, "trials": trials}, outputs=item.as_dict()))
    return records


def cmd_gamma(tolerance: float = 1e-9) -> RunRecord:
    result = bound_math.gamma_optimize(tolerance)
    return RunRecord("gamma", None, {"tolerance": tolerance}, outputs={
        "z_star": f"{result.z_star:.6f}",
        "gamma": f"{result.gamma:.6f}",
    })


def timed(fn, *args, **kwargs):
    """Run fn and return (value, seconds)."""
    start = time.perf_counter()
    value = fn(*args, **kwargs)
    return value, time.perf_counter() - start
