"""
The experiment harness.

For every ``n`` in the config and every sample index an instance is generated,
persisted, reduced and checked. Each check that fails turns the row into a
``COUNTEREXAMPLE`` with the failing check names in the ``breaches`` column;
rows are never dropped.

Outputs in the output directory:

``report.csv``
    One row per instance ordered by ``(n, sample)``, preceded by a schema
    comment. Reproducible byte for byte from the config.

``timings.csv``
    Seconds spent in each stage, kept apart from the report so the report
    stays reproducible.

``instances/``
    Every generated graph in the text format, with the instance description
    and reduction threshold in comment lines.

.. autofunction:: run_experiment

.. autofunction:: validate_instance
"""
import csv
import io
import logging
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from rainbowpath import auxiliary, generators, reduction
from rainbowpath.errors import GenerationError, InputError, InvariantBreach, RainbowError
from rainbowpath.graph import is_star_forest, parse_graph, read_text, write_graph
from rainbowpath.logging import lc
from rainbowpath.norms import Meta, dictobj, sb, va
from rainbowpath.paths import (
    DEFAULT_MAX_LEN,
    DEFAULT_TRIALS,
    ENGINES,
    is_rainbow_connected,
    is_properly_connected,
    rainbow_k_connect,
)

log = logging.getLogger("rainbowpath.experiment")

SCHEMA_VERSION = 1

REPORT_COLUMNS = [
    "family",
    "n",
    "sample",
    "seed",
    "status",
    "delta_c",
    "threshold",
    "edges",
    "reduced_edges",
    "fact_margin",
    "fact_holds",
    "worst_pair",
    "worst_len",
    "length_histogram",
    "fallbacks",
    "kconnect",
    "proper_connected",
    "breaches",
    "instance",
    "error",
]

TIMING_COLUMNS = ["n", "sample", "generate", "diagnose", "kconnect", "proper"]

# Edge minimality is re-checked by trying every single deletion up to this size
MINIMALITY_CHECK_LIMIT = 60


class ExperimentConfig(dictobj.Spec):
    family = dictobj.Field(
        sb.string_choice_spec(generators.FAMILIES), default="random_colored", help="Instance family"
    )
    n_list = dictobj.Field(
        sb.listof(sb.and_spec(sb.integer_spec(), va.greater_than(1))),
        wrapper=sb.required,
        help="Vertex counts to sweep",
    )
    samples = dictobj.Field(
        sb.and_spec(sb.integer_spec(), va.greater_than(0)), default=1, help="Instances per n"
    )
    seed = dictobj.Field(sb.integer_spec, default=0, help="Base seed for every random choice")
    max_len = dictobj.Field(
        sb.and_spec(sb.integer_spec(), va.greater_than(0)), default=DEFAULT_MAX_LEN
    )
    k_list = dictobj.Field(
        sb.listof(sb.and_spec(sb.integer_spec(), va.greater_than(0))),
        help="k values for the k-connectivity procedure",
    )
    k = dictobj.Field(
        sb.and_spec(sb.integer_spec(), va.greater_than(0)),
        default=2,
        help="k for the two_clique_matchings family",
    )
    pairs_per_k = dictobj.Field(
        sb.and_spec(sb.integer_spec(), va.greater_than(0)),
        default=5,
        help="Vertex pairs sampled for each k",
    )
    delta_offset = dictobj.Field(
        sb.fraction_spec, default=Fraction(0), help="random_colored target is n/2 plus this"
    )
    palette = dictobj.NullableField(
        sb.and_spec(sb.integer_spec(), va.greater_than(0)), help="Palette size, defaults to 2n"
    )
    engine = dictobj.Field(sb.string_choice_spec(ENGINES), default="exact")
    trials = dictobj.Field(
        sb.and_spec(sb.integer_spec(), va.greater_than(0)), default=DEFAULT_TRIALS
    )
    node_cap = dictobj.NullableField(
        sb.and_spec(sb.integer_spec(), va.greater_than(0)),
        help="Exact search switches to color coding past this many expansions",
    )
    proper_limit = dictobj.Field(
        sb.and_spec(sb.integer_spec(), va.greater_than(1)),
        default=12,
        help="Largest n for the proper connectivity column",
    )
    workers = dictobj.Field(sb.and_spec(sb.integer_spec(), va.greater_than(0)), default=1)
    output_dir = dictobj.Field(sb.string_spec, default="experiment")

    def instance_spec(self, n, sample):
        return generators.InstanceSpec.FieldSpec().empty_normalise(
            family=self.family,
            n=n,
            k=self.k,
            seed=sample_seed(self.seed, n, sample),
            palette=self.palette,
            target_delta=Fraction(n, 2) + self.delta_offset,
        )


def sample_seed(seed, n, sample):
    return (seed * 1_000_003 + n * 1009 + sample) % (2**31)


class Check(dictobj):
    fields = ["name", "ok", "detail"]


class Diagnosis(dictobj):
    """Everything the invariant checks computed for one graph"""

    fields = [
        "threshold",
        "reduced",
        "reduction",
        "digraph",
        "margin",
        "fact_holds",
        "connectivity",
        "checks",
    ]

    @property
    def breaches(self):
        return [check.name for check in self.checks if not check.ok]


def diagnose(
    graph,
    threshold,
    max_len=DEFAULT_MAX_LEN,
    engine="exact",
    trials=DEFAULT_TRIALS,
    seed=0,
    node_cap=None,
):
    """Reduce the graph and run every structural check on the result"""
    checks = []
    n = graph.n

    reduced, report = reduction.reduce_minimal(graph, threshold)
    threshold = report.threshold
    delta = reduced.min_color_degree()
    checks.append(Check("threshold_kept", delta >= threshold, f"delta_c={delta}"))

    not_stars = [c for c, view in reduced.color_classes().items() if not is_star_forest(view)]
    checks.append(Check("star_forests", not not_stars, f"colors={not_stars[:5]}"))

    if n <= MINIMALITY_CHECK_LIMIT:
        checks.append(
            Check("edge_minimal", reduction.is_edge_minimal(reduced, threshold), "")
        )

    digraph = auxiliary.build_DG(reduced)
    dstar = auxiliary.build_Dstar(digraph)
    gstar = auxiliary.build_Gstar(digraph)
    checks.append(
        Check("arc_partition", auxiliary.arc_partition_holds(digraph, dstar, gstar), "")
    )
    checks.append(Check("outdegree_split", auxiliary.outdegree_split(digraph).holds, ""))
    checks.append(Check("gstar_proper", gstar.is_properly_colored(), ""))

    dprime = auxiliary.build_Dprime(reduced)
    checks.append(
        Check(
            "dprime_outdegree",
            dprime.min_out_degree() == delta,
            f"min_out={dprime.min_out_degree()}",
        )
    )

    half_or_more = 2 * delta >= n
    fact_holds = auxiliary.exceeds_half_minus_root(digraph.min_out_degree(), n)
    if half_or_more:
        checks.append(
            Check("outdegree_bound", fact_holds, f"min_out={digraph.min_out_degree()}")
        )

    connectivity = is_rainbow_connected(
        reduced, max_len=max_len, engine=engine, trials=trials, seed=seed, node_cap=node_cap
    )
    if half_or_more:
        checks.append(
            Check(
                "rainbow_connected",
                connectivity.connected,
                f"worst_pair={connectivity.worst_pair}",
            )
        )

    return Diagnosis(
        threshold=threshold,
        reduced=reduced,
        reduction=report,
        digraph=digraph,
        margin=auxiliary.outdegree_margin(digraph),
        fact_holds=fact_holds,
        connectivity=connectivity,
        checks=checks,
    )


class ExperimentRow(dictobj):
    fields = [(name, "") for name in REPORT_COLUMNS] + [("timings", dict)]

    def csv_values(self):
        return [_csv_value(self[name]) for name in REPORT_COLUMNS]


def _csv_value(val):
    if val is None:
        return ""
    if isinstance(val, bool):
        return "true" if val else "false"
    if isinstance(val, float):
        return f"{val:.6f}"
    if isinstance(val, tuple):
        return "-".join(str(v) for v in val)
    if isinstance(val, dict):
        return ";".join(f"{k}:{v}" for k, v in val.items())
    if isinstance(val, list):
        return ";".join(str(v) for v in val)
    return str(val)


def threshold_for(spec, graph):
    """random_colored reduces to its target, the fixed families to their own minimum"""
    if spec.family == "random_colored":
        return spec.target
    return Fraction(graph.min_color_degree())


def sample_pairs(n, count, seed):
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    rng = random.Random(seed)
    if len(pairs) <= count:
        return pairs
    return sorted(rng.sample(pairs, count))


def instance_name(n, sample):
    return f"n{n}_s{sample}.txt"


def run_sample(config, n, sample):
    """Produce the ExperimentRow for one (n, sample)"""
    spec = config.instance_spec(n, sample)
    seed = spec.seed
    row = ExperimentRow(family=config.family, n=n, sample=sample, seed=seed)
    timings = {}
    ctx = lc.using(n=n, sample=sample)

    started = time.perf_counter()
    try:
        graph = generators.generate(spec)
    except (GenerationError, InputError) as error:
        row.status = "GENERATION_FAILED"
        row.error = error.oneline()
        log.info(ctx("Generation failed", error=error.message))
        return row
    timings["generate"] = time.perf_counter() - started

    threshold = threshold_for(spec, graph)
    instances = os.path.join(config.output_dir, "instances")
    os.makedirs(instances, exist_ok=True)
    path = os.path.join(instances, instance_name(n, sample))
    write_graph(graph, path, comments=[spec.describe(), f"threshold={threshold}"])

    row.update(
        instance=os.path.join("instances", instance_name(n, sample)),
        delta_c=graph.min_color_degree(),
        threshold=threshold,
        edges=graph.m,
    )

    started = time.perf_counter()
    diagnosis = diagnose(
        graph,
        threshold,
        max_len=config.max_len,
        engine=config.engine,
        trials=config.trials,
        seed=seed,
        node_cap=config.node_cap,
    )
    timings["diagnose"] = time.perf_counter() - started

    connectivity = diagnosis.connectivity
    row.update(
        reduced_edges=diagnosis.reduced.m,
        fact_margin=diagnosis.margin,
        fact_holds=diagnosis.fact_holds,
        worst_pair=connectivity.worst_pair,
        worst_len=connectivity.worst_len,
        length_histogram=connectivity.histogram,
        fallbacks=connectivity.fallbacks,
    )
    breaches = diagnosis.breaches

    started = time.perf_counter()
    outcomes = []
    for k in config.k_list:
        pairs = sample_pairs(n, config.pairs_per_k, seed + k)
        found = 0
        for u, v in pairs:
            try:
                cert = rainbow_k_connect(
                    diagnosis.reduced,
                    u,
                    v,
                    k,
                    max_len=config.max_len,
                    engine=config.engine,
                    trials=config.trials,
                    seed=seed,
                )
            except RainbowError as error:
                breaches.append(f"kconnect_certificate:{k}")
                log.warning(ctx("k-connect certificate rejected", k=k, error=str(error)))
                continue
            if cert is not None:
                found += 1
        outcomes.append(f"{k}:{found}/{len(pairs)}")
    row.kconnect = outcomes
    timings["kconnect"] = time.perf_counter() - started

    if n <= config.proper_limit:
        started = time.perf_counter()
        row.proper_connected = is_properly_connected(graph)
        timings["proper"] = time.perf_counter() - started

    row.breaches = breaches
    row.status = "COUNTEREXAMPLE" if breaches else "OK"
    row.timings = timings
    if breaches:
        log.warning(ctx("COUNTEREXAMPLE", breaches=breaches, instance=path))
    else:
        log.info(ctx("Instance checked", worst_len=row.worst_len, delta_c=row.delta_c))
    return row


def _run_job(job):
    config, n, sample = job
    return run_sample(config, n, sample)


class ExperimentResult(dictobj):
    fields = ["rows", "report_path", "timings_path"]

    @property
    def counterexamples(self):
        return [row for row in self.rows if row.status == "COUNTEREXAMPLE"]


def report_text(config, rows):
    out = io.StringIO()
    out.write(
        f"# rainbowpath experiment schema={SCHEMA_VERSION} family={config.family}"
        f" seed={config.seed} max_len={config.max_len} engine={config.engine}\n"
    )
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(REPORT_COLUMNS)
    for row in rows:
        writer.writerow(row.csv_values())
    return out.getvalue()


def timings_text(rows):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(TIMING_COLUMNS)
    for row in rows:
        writer.writerow(
            [row.n, row.sample]
            + [_csv_value(row.timings.get(stage)) for stage in TIMING_COLUMNS[2:]]
        )
    return out.getvalue()


def run_experiment(config):
    """
    Run the sweep a :class:`ExperimentConfig` (or a dictionary of one)
    describes and write ``report.csv`` and ``timings.csv``.
    """
    if not isinstance(config, ExperimentConfig):
        config = ExperimentConfig.FieldSpec().empty_normalise(**config)

    try:
        os.makedirs(config.output_dir, exist_ok=True)
    except OSError as error:
        raise InputError("Couldn't create output directory", location=config.output_dir, error=str(error))

    jobs = [(config, n, sample) for n in sorted(config.n_list) for sample in range(config.samples)]
    log.info(lc("Starting experiment", instances=len(jobs), workers=config.workers))

    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            rows = list(pool.map(_run_job, jobs))
    else:
        rows = [_run_job(job) for job in jobs]

    rows.sort(key=lambda row: (row.n, row.sample))

    report_path = os.path.join(config.output_dir, "report.csv")
    timings_path = os.path.join(config.output_dir, "timings.csv")
    with open(report_path, "w") as fle:
        fle.write(report_text(config, rows))
    with open(timings_path, "w") as fle:
        fle.write(timings_text(rows))

    return ExperimentResult(rows=rows, report_path=report_path, timings_path=timings_path)


########################
###   VALIDATE
########################


class ValidationReport(dictobj):
    fields = ["source", "n", "m", "delta_c", "threshold", "worst_len", "checks"]

    @property
    def ok(self):
        return all(check.ok for check in self.checks)

    @property
    def breaches(self):
        return [check.name for check in self.checks if not check.ok]

    def lines(self):
        lines = [
            f"source={self.source}",
            f"n={self.n}",
            f"m={self.m}",
            f"delta_c={self.delta_c}",
            f"threshold={self.threshold}",
            f"worst_len={'' if self.worst_len is None else self.worst_len}",
        ]
        for check in self.checks:
            status = "OK" if check.ok else "BREACH"
            lines.append(f"{status} {check.name}{' ' + check.detail if check.detail else ''}")
        return lines


def comment_values(text):
    """``key=value`` tokens from the comment lines of a graph file"""
    values = {}
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped.startswith("#"):
            continue
        for token in stripped.lstrip("#").split():
            if "=" in token:
                key, _, value = token.partition("=")
                values[key] = value
    return values


def validate_instance(location, threshold=None, max_len=DEFAULT_MAX_LEN, engine="exact", node_cap=None):
    """
    Re-run every check on one graph file.

    The threshold comes from the argument, else from a ``threshold=`` comment
    written by the harness, else the graph's own minimum color degree.
    """
    text = read_text(location)

    graph = parse_graph(text, source=str(location))
    if threshold is None:
        recorded = comment_values(text).get("threshold")
        if recorded is not None:
            threshold = sb.fraction_spec().normalise(Meta.empty().at("threshold"), recorded)
        else:
            threshold = Fraction(graph.min_color_degree())

    diagnosis = diagnose(graph, threshold, max_len=max_len, engine=engine, node_cap=node_cap)
    return ValidationReport(
        source=str(location),
        n=graph.n,
        m=graph.m,
        delta_c=graph.min_color_degree(),
        threshold=diagnosis.threshold,
        worst_len=diagnosis.connectivity.worst_len,
        checks=diagnosis.checks,
    )


def assert_valid(location, **kwargs):
    report = validate_instance(location, **kwargs)
    if not report.ok:
        raise InvariantBreach(source=report.source, breaches=report.breaches)
    return report
