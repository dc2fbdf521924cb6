"""
The ``rainbowpath`` command.

.. code-block:: text

    rainbowpath gen --family fm_example --n 11 -o fm11.txt
    rainbowpath reduce fm11.txt --mode minimal --threshold 5
    rainbowpath aux fm11.txt --emit report --beta 1/100
    rainbowpath path fm11.txt --source 0 --target 7 --engine cc --seed 3
    rainbowpath proper fm11.txt --source 9 --target 10
    rainbowpath connect fm11.txt --workers 4
    rainbowpath kconnect twoclique.txt --source 0 --target 6 --k 2 --exhaustive
    rainbowpath rst union.txt --oracle
    rainbowpath experiment --config sweep.json --n-list 10,20 --samples 5
    rainbowpath validate experiment/instances/n10_s0.txt

The first positional argument is the task and the second the graph file
(``-`` reads stdin). ``RAINBOWPATH_WORKERS`` and ``RAINBOWPATH_SEED`` provide
defaults for ``--workers`` and ``--seed``.
"""
import json
import logging
import sys
from fractions import Fraction

from rainbowpath import auxiliary, experiment, generators, reduction, spanning
from rainbowpath.app import App, ArgumentError, BadOption
from rainbowpath.errors import InputError, InvariantBreach
from rainbowpath.graph import dumps_graph, read_graph, write_graph
from rainbowpath.logging import lc
from rainbowpath.norms import Meta, dictobj, sb, va
from rainbowpath.paths import (
    SearchOptions,
    exhaustive_k_connect,
    find_proper_path,
    find_rainbow_path,
    is_rainbow_connected,
    proper_connectivity_report,
    rainbow_k_connect,
)
from rainbowpath.version import VERSION

log = logging.getLogger("rainbowpath.executor")

EMIT_CHOICES = ("dg", "dstar", "gstar", "dprime", "report")
DEFAULT_BETA = Fraction(1, 100)

available_tasks = {}


def task(func):
    """Register a task under the function's name, less any trailing underscore"""
    available_tasks[func.__name__.rstrip("_")] = func
    return func


def _values(options):
    return {key: val for key, val in options.items() if val is not None}


class AuxOptions(dictobj.Spec):
    emit = dictobj.Field(sb.string_choice_spec(EMIT_CHOICES), default="report")
    beta = dictobj.Field(
        sb.and_spec(sb.fraction_spec(), va.in_open_interval(0, 1)), default=DEFAULT_BETA
    )
    gamma = dictobj.NullableField(sb.and_spec(sb.fraction_spec(), va.in_open_interval(0, 1)))


class Collector(dictobj):
    """What every task gets: the parsed options and somewhere to print"""

    fields = ["options", "out"]

    def emit(self, lines):
        text = lines if isinstance(lines, str) else "".join(f"{line}\n" for line in lines)
        output = self.options.get("output")
        if output:
            with open(output, "w") as fle:
                fle.write(text)
        else:
            self.out.write(text)

    def say(self, *lines):
        for line in lines:
            print(line, file=self.out)

    def graph(self):
        location = self.options.get("graph")
        if not location:
            raise BadOption("Please specify a graph file", task=self.options.get("task"))
        if location == "-":
            return read_graph(sys.stdin)
        return read_graph(location)

    def integer(self, name, default=None, required=False):
        val = self.options.get(name)
        if val is None:
            if required:
                raise BadOption(f"Please specify --{name}", task=self.options.get("task"))
            return default
        return sb.integer_spec().normalise(Meta.empty().at(name), val)

    def integer_list(self, name):
        val = self.options.get(name)
        if val is None:
            return []
        return sb.listof(sb.integer_spec()).normalise(Meta.empty().at(name), val)

    def seed(self):
        return self.integer("seed", default=0)

    def search_options(self):
        values = _values(self.options["search"])
        values["seed"] = self.seed()
        return SearchOptions.FieldSpec().normalise(Meta.empty().at("search"), values)

    def endpoints(self):
        return self.integer("source", required=True), self.integer("target", required=True)


########################
###   TASKS
########################


@task
def help_(collector):
    """List the available tasks"""
    collector.say("Available tasks:")
    for name, func in sorted(available_tasks.items()):
        summary = (func.__doc__ or "").strip().split("\n")[0]
        collector.say(f"  {name:<12}{summary}")


@task
def gen(collector):
    """Generate an instance from one of the families"""
    values = _values(collector.options["gen"])
    values["seed"] = collector.seed()
    if collector.options.get("k") is not None:
        values["k"] = collector.options["k"]
    spec = generators.InstanceSpec.FieldSpec().normalise(Meta.empty().at("gen"), values)
    graph = generators.generate(spec)
    log.info(lc("Generated instance", family=spec.family, n=graph.n, m=graph.m))
    collector.emit(
        dumps_graph(graph, comments=[spec.describe(), f"delta_c={graph.min_color_degree()}"])
    )


@task
def reduce(collector):
    """Delete edges while keeping the color degree threshold"""
    graph = collector.graph()
    options = collector.options["reduce"]

    threshold = options.get("threshold")
    if threshold is None:
        threshold = Fraction(graph.min_color_degree())
    else:
        threshold = sb.fraction_spec().normalise(Meta.empty().at("threshold"), threshold)

    reduced, report = reduction.reduce(graph, threshold, mode=options.get("mode") or "minimal")
    log.info(
        lc("Reduced graph", mode=report.mode, before=graph.m, after=reduced.m, threshold=str(threshold))
    )

    comments = [f"threshold={threshold}", f"mode={report.mode}"]
    if collector.options.get("output"):
        write_graph(reduced, collector.options["output"], comments=comments)
        collector.say(*report.lines())
    else:
        # stdout stays parseable as a graph
        collector.out.write(dumps_graph(reduced, comments=comments + report.lines()))


@task
def aux(collector):
    """Print an auxiliary digraph or the extremality and dominant color report"""
    graph = collector.graph()
    options = AuxOptions.FieldSpec().normalise(
        Meta.empty().at("aux"), _values(collector.options["aux"])
    )
    dg = auxiliary.build_DG(graph)

    if options.emit == "dg":
        collector.emit(dg.lines())
        return
    elif options.emit == "dstar":
        collector.emit(auxiliary.build_Dstar(dg).lines())
        return
    elif options.emit == "gstar":
        collector.emit(auxiliary.build_Gstar(dg).lines())
        return

    large = auxiliary.dominant_analysis(graph, dg, options.beta, options.gamma).U
    dprime = auxiliary.build_Dprime(graph, large)
    if options.emit == "dprime":
        collector.emit(dprime.lines())
        return

    split = auxiliary.outdegree_split(dg)
    lines = [
        f"min_out={split.min_out}",
        f"min_dstar_out={split.min_dstar_out}",
        f"min_gstar_degree={split.min_gstar_degree}",
        f"split_holds={split.holds}",
        f"fact_margin={auxiliary.outdegree_margin(dg):.6f}",
        f"fact_holds={auxiliary.exceeds_half_minus_root(dg.min_out_degree(), graph.n)}",
    ]
    lines.extend(auxiliary.classify_extremal(graph, dg, options.beta).lines())
    lines.extend(auxiliary.dominant_analysis(graph, dprime, options.beta, options.gamma).lines())
    collector.emit(lines)


@task
def path(collector):
    """Find a short rainbow path between --source and --target"""
    graph = collector.graph()
    u, v = collector.endpoints()
    options = collector.search_options()
    found = find_rainbow_path(
        graph,
        u,
        v,
        max_len=options.max_len,
        engine=options.engine,
        trials=options.trials,
        seed=options.seed,
        forbidden_colors=collector.integer_list("forbid_colors"),
        forbidden_vertices=collector.integer_list("forbid_vertices"),
        node_cap=options.node_cap,
    )
    collector.say("none" if found is None else found.format())


@task
def proper(collector):
    """Find a properly colored path, or check every pair when no endpoints are given"""
    graph = collector.graph()
    max_len = collector.options["search"].get("max_len")
    if max_len is not None:
        max_len = sb.and_spec(sb.integer_spec(), va.greater_than(0)).normalise(
            Meta.empty().at("max_len"), max_len
        )

    if collector.options.get("source") is None and collector.options.get("target") is None:
        report = proper_connectivity_report(graph)
        pair = report.failing_pair
        collector.say(
            f"connected={report.connected}",
            f"failing_pair={'' if pair is None else f'{pair[0]}-{pair[1]}'}",
            f"checked={report.checked}",
        )
        return

    u, v = collector.endpoints()
    found = find_proper_path(
        graph, u, v, max_len=max_len, forbidden_vertices=collector.integer_list("forbid_vertices")
    )
    collector.say("none" if found is None else found.format())


@task
def connect(collector):
    """Check rainbow connectivity of every pair within --max-len"""
    graph = collector.graph()
    options = collector.search_options()
    report = is_rainbow_connected(
        graph,
        max_len=options.max_len,
        engine=options.engine,
        trials=options.trials,
        seed=options.seed,
        node_cap=options.node_cap,
        workers=collector.integer("workers", default=1),
    )
    worst = report.worst_pair
    collector.say(
        f"connected={report.connected}",
        f"worst_pair={'' if worst is None else f'{worst[0]}-{worst[1]}'}",
        f"worst_len={'' if report.worst_len is None else report.worst_len}",
        f"histogram={';'.join(f'{k}:{v}' for k, v in report.histogram.items())}",
        f"missing={len(report.missing)}",
        f"fallbacks={report.fallbacks}",
    )


@task
def kconnect(collector):
    """Find k internally disjoint paths whose union is rainbow"""
    graph = collector.graph()
    u, v = collector.endpoints()
    k = collector.integer("k", default=2)

    if collector.options.get("exhaustive"):
        max_len = collector.options["search"].get("max_len")
        if max_len is not None:
            max_len = sb.integer_spec().normalise(Meta.empty().at("max_len"), max_len)
        found = exhaustive_k_connect(graph, u, v, k, max_len=max_len)
    else:
        options = collector.search_options()
        found = rainbow_k_connect(
            graph,
            u,
            v,
            k,
            max_len=options.max_len,
            engine=options.engine,
            trials=options.trials,
            seed=options.seed,
        )
    collector.say(*(["none"] if found is None else found.lines()))


@task
def rst(collector):
    """Find a rainbow spanning tree, optionally cross checking the color removal criterion"""
    graph = collector.graph()
    found = spanning.find_rainbow_spanning_tree(graph)
    lines = ["none"] if found is None else found.lines()

    if collector.options.get("oracle"):
        witness = spanning.criterion_witness(graph)
        lines.append(f"criterion={witness is None}")
        if witness is not None:
            lines.append(f"criterion_witness={','.join(str(c) for c in witness)}")
        if (witness is None) != (found is not None):
            raise InvariantBreach(
                "Spanning tree search and the criterion disagree",
                tree_found=found is not None,
                witness=witness,
            )

    collector.emit(lines)


@task
def experiment_(collector):
    """Run a sweep and write report.csv, timings.csv and every instance"""
    raw = {}
    location = collector.options["experiment"].get("config")
    if location:
        try:
            with open(location) as fle:
                raw = json.load(fle)
        except OSError as error:
            raise InputError("Couldn't read config", location=location, error=str(error))
        except ValueError as error:
            raise InputError("Config isn't valid json", location=location, error=str(error))
        if not isinstance(raw, dict):
            raise InputError("Config must be a json object", location=location)

    overrides = {
        key: val
        for key, val in collector.options["experiment"].items()
        if key != "config" and val is not None
    }
    for key in ("max_len", "engine", "trials", "node_cap"):
        if collector.options["search"].get(key) is not None:
            overrides[key] = collector.options["search"][key]
    for key in ("seed", "workers", "k"):
        if collector.options.get(key) is not None:
            overrides[key] = collector.options[key]
    if collector.options["gen"].get("family") is not None:
        overrides["family"] = collector.options["gen"]["family"]
    if collector.options["gen"].get("palette") is not None:
        overrides["palette"] = collector.options["gen"]["palette"]
    if collector.options.get("output_dir") is not None:
        overrides["output_dir"] = collector.options["output_dir"]

    config = experiment.ExperimentConfig.FieldSpec().normalise(
        Meta.empty(), {**raw, **overrides}
    )
    result = experiment.run_experiment(config)
    collector.say(
        f"report={result.report_path}",
        f"timings={result.timings_path}",
        f"rows={len(result.rows)}",
        f"counterexamples={len(result.counterexamples)}",
    )


@task
def validate(collector):
    """Re-run every check on one instance; exits non zero on a breach"""
    location = collector.options.get("graph")
    if not location:
        raise BadOption("Please specify a graph file", task="validate")

    threshold = collector.options["reduce"].get("threshold")
    if threshold is not None:
        threshold = sb.fraction_spec().normalise(Meta.empty().at("threshold"), threshold)

    options = collector.search_options()
    report = experiment.validate_instance(
        location,
        threshold=threshold,
        max_len=options.max_len,
        engine=options.engine,
        node_cap=options.node_cap,
    )
    collector.say(*report.lines())
    if not report.ok:
        raise InvariantBreach(source=report.source, breaches=report.breaches)


########################
###   APP
########################


class RainbowApp(App):
    VERSION = VERSION
    cli_description = "Rainbow and properly colored paths in edge colored graphs"
    cli_categories = ["gen", "reduce", "aux", "search", "experiment"]
    cli_positional_replacements = [("--task", "help"), "--graph"]
    cli_environment_defaults = {
        "RAINBOWPATH_WORKERS": "--workers",
        "RAINBOWPATH_SEED": "--seed",
    }

    def execute(self, args_obj, args_dict, extra_args, logging_handler, out=sys.stdout, **kwargs):
        name = args_dict["task"]
        if name not in available_tasks:
            raise BadOption("Unknown task", wanted=name, available=sorted(available_tasks))
        if extra_args:
            raise ArgumentError("Tasks don't take arguments after --", got=extra_args)

        log.debug(lc("Running task", task=name))
        available_tasks[name](Collector(options=args_dict, out=out))

    def specify_other_args(self, parser, defaults):
        parser.add_argument("--task", help="The task to run", dest="task", **defaults["--task"])
        parser.add_argument(
            "--graph", help="Graph file, - for stdin", dest="graph", **defaults["--graph"]
        )
        parser.add_argument("-o", "--output", help="Write output here instead of stdout")
        parser.add_argument("--seed", help="Seed for anything random", **defaults["--seed"])
        parser.add_argument(
            "--workers", help="Worker processes for connect and experiment", **defaults["--workers"]
        )

        parser.add_argument("--family", dest="gen_family", choices=generators.FAMILIES)
        parser.add_argument("--n", dest="gen_n", help="Number of vertices")
        parser.add_argument("--palette", dest="gen_palette", help="Palette size for random_colored")
        parser.add_argument(
            "--target-delta", dest="gen_target_delta", help="Color degree target like 21/2"
        )
        parser.add_argument("--k", help="k for kconnect and two_clique_matchings")

        parser.add_argument("--mode", dest="reduce_mode", choices=["structural", "minimal"])
        parser.add_argument(
            "--threshold", dest="reduce_threshold", help="Color degree threshold like 21/2"
        )

        parser.add_argument("--emit", dest="aux_emit", choices=EMIT_CHOICES)
        parser.add_argument("--beta", dest="aux_beta", help="Extremality parameter in (0, 1)")
        parser.add_argument("--gamma", dest="aux_gamma", help="Defaults to sqrt(beta)/16")

        parser.add_argument("--max-len", dest="search_max_len")
        parser.add_argument("--engine", dest="search_engine", choices=["exact", "cc"])
        parser.add_argument("--trials", dest="search_trials", help="Color coding labelings")
        parser.add_argument(
            "--node-cap", dest="search_node_cap", help="Fall back to color coding past this"
        )
        parser.add_argument("--source", help="First endpoint")
        parser.add_argument("--target", help="Second endpoint")
        parser.add_argument("--forbid-colors", help="Comma separated colors to avoid")
        parser.add_argument("--forbid-vertices", help="Comma separated vertices to avoid")
        parser.add_argument(
            "--exhaustive", help="kconnect tries every path set", action="store_true"
        )
        parser.add_argument("--oracle", help="rst also checks the criterion", action="store_true")

        parser.add_argument("--config", dest="experiment_config", help="Json experiment config")
        parser.add_argument("--n-list", dest="experiment_n_list", help="Comma separated n")
        parser.add_argument("--samples", dest="experiment_samples")
        parser.add_argument("--k-list", dest="experiment_k_list")
        parser.add_argument("--output-dir")


main = RainbowApp.main

if __name__ == "__main__":
    main()
