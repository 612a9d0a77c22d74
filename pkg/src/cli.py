"""
命令行入口

每个子命令由 register_command 注册，名字中的空格表示两级子命令（例如 "inc image"）。
结果只写 stdout，日志只写 stderr。退出码：0 成功或验证通过，1 发现违例，2 用法或输入错误。
"""

import argparse
import os
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from rich.console import Console
from rich.table import Table

from . import __version__
from .compression import compress, compress_above, descent_chain, fixpoint_trace, left_compress, right_compress
from .config import Config, dump_config, global_config, init_config
from .errors import (
    ComplexClosureError,
    IncKKError,
    InfeasibleChainError,
    InputFormatError,
    NonInvariantChainError,
    PreconditionError,
)
from .inc_action import comb_shift, inc_image_family, inc_iterate, inc_orbit
from .io_formats import (
    complex_to_json,
    dumps,
    family_to_json,
    format_dset,
    format_family,
    fvector_to_json,
    parse_chain,
    parse_complex,
    parse_dset,
    parse_family,
    parse_fvector,
)
from .logger import get_logger, setup_logger
from .numeric import chain_feasible, inc_num, kk_feasible, shadow_num
from .oracle import (
    VerificationReport,
    equality_cases,
    find_shift_witness,
    identity_failures,
    verify_identity_sweep,
    verify_min_theorem,
    verify_segment_lemmas,
    verify_shadow_theorem,
    verify_shift_shadow,
    verify_structure_preservation,
)
from .sets import Family, Ordering, binomial_rep, borel_leq, rank, squashed_cmp, unrank
from .simplicial import (
    check_chain,
    compress_complex,
    construct_chain,
    f_vector,
    inc_chain,
    inc_complex,
    non_faces,
    stabilization_report,
)

logger = get_logger("CLI")

JOBS_ENV = "INC_KK_JOBS"

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

Argument = Tuple[Tuple[str, ...], Dict[str, Any]]

# 全局命令注册表，按注册顺序构建子命令
_command_handlers: Dict[str, Dict[str, Any]] = {}

_GROUP_HELP = {
    "inc": "Inc₁ 作用",
    "order": "squashed 序、秩与二项式表示",
    "partial": "左/右部分压缩",
    "numeric": "数值算子 ∂_d 与 Inc^[d]",
    "fvector": "f-向量",
    "chain": "f-向量链与复形链",
    "complex": "单纯复形",
    "verify": "穷举与抽样验证",
    "search": "反例搜索",
    "config": "配置文件",
}


def arg(*flags: str, **kwargs: Any) -> Argument:
    return flags, kwargs


def register_command(name: str, help: str, *arguments: Argument):
    """装饰器：注册命令处理器

    Args:
        name: 命令名，"group sub" 表示两级子命令
        help: 帮助文本
        arguments: 传给 add_argument 的参数

    Returns:
        装饰器函数
    """

    def decorator(func: Callable[["CommandContext", argparse.Namespace], int]) -> Callable:
        _command_handlers[name] = {"handler": func, "help": help, "arguments": arguments}
        return func

    return decorator


@dataclass
class CommandContext:
    json: bool
    timing: bool
    config: Config

    def emit(self, text: str, data: Any) -> None:
        sys.stdout.write((dumps(data) if self.json else text) + "\n")


INPUT = arg("-i", "--input", default="-", help="输入文件，- 表示标准输入")
M_ARG = arg("--m", type=int, required=True, help="非负整数 m")
D_ARG = arg("--d", type=int, required=True, help="集合大小 d")


def _read_input(args: argparse.Namespace) -> str:
    if args.input == "-":
        return sys.stdin.read()
    try:
        with open(args.input, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise InputFormatError(f"无法读取输入文件 {args.input}: {e}") from e


def _read_family(args: argparse.Namespace) -> Family:
    return parse_family(_read_input(args))


def _emit_family(ctx: CommandContext, family: Family) -> int:
    ctx.emit(format_family(family), family_to_json(family))
    return EXIT_OK


def resolve_jobs(flag: Optional[int], config: Config) -> int:
    """--jobs > INC_KK_JOBS > 配置文件"""
    if flag is not None:
        return flag
    raw = os.environ.get(JOBS_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError as e:
            raise InputFormatError(f"环境变量 {JOBS_ENV} 必须是整数: {raw!r}") from e
    return config.verify.jobs


# ---------------------------------------------------------------- inc


@register_command("inc image", "计算 Inc(F)", INPUT)
def cmd_inc_image(ctx: CommandContext, args: argparse.Namespace) -> int:
    return _emit_family(ctx, inc_image_family(_read_family(args)))


@register_command("inc iterate", "计算 Inc 的 t 次复合", INPUT, arg("--steps", type=int, required=True))
def cmd_inc_iterate(ctx: CommandContext, args: argparse.Namespace) -> int:
    return _emit_family(ctx, inc_iterate(_read_family(args), args.steps))


@register_command("inc shift", "组合移位 S_i(F)", INPUT, arg("--i", type=int, required=True))
def cmd_inc_shift(ctx: CommandContext, args: argparse.Namespace) -> int:
    return _emit_family(ctx, comb_shift(args.i, _read_family(args)))


@register_command(
    "inc orbit",
    "{π_i(u), ..., π_j(u)}",
    arg("--u", required=True, help='d-集合，例如 "1 3"'),
    arg("--i", type=int, required=True),
    arg("--j", type=int, required=True),
)
def cmd_inc_orbit(ctx: CommandContext, args: argparse.Namespace) -> int:
    return _emit_family(ctx, inc_orbit(parse_dset(args.u, "--u"), args.i, args.j))


# ---------------------------------------------------------------- order


@register_command("order rank", "squashed 序中的秩", arg("--u", required=True))
def cmd_order_rank(ctx: CommandContext, args: argparse.Namespace) -> int:
    u = parse_dset(args.u, "--u")
    value = rank(u)
    ctx.emit(str(value), {"u": list(u.elements), "rank": value})
    return EXIT_OK


@register_command("order unrank", "秩为 m 的 d-集合", M_ARG, D_ARG)
def cmd_order_unrank(ctx: CommandContext, args: argparse.Namespace) -> int:
    u = unrank(args.m, args.d)
    ctx.emit(format_dset(u), list(u.elements))
    return EXIT_OK


@register_command("order rep", "m 的 d-二项式表示", M_ARG, D_ARG)
def cmd_order_rep(ctx: CommandContext, args: argparse.Namespace) -> int:
    rep = binomial_rep(args.m, args.d)
    ctx.emit(str(rep), {"m": args.m, "d": args.d, "terms": [[a, i] for a, i in rep.terms]})
    return EXIT_OK


@register_command(
    "order cmp",
    "比较两个 d-集合",
    arg("--u", required=True),
    arg("--v", required=True),
    arg("--borel", action="store_true", help="按 Borel 偏序比较"),
)
def cmd_order_cmp(ctx: CommandContext, args: argparse.Namespace) -> int:
    u, v = parse_dset(args.u, "--u"), parse_dset(args.v, "--v")
    if args.borel:
        below, above = borel_leq(u, v), borel_leq(v, u)
        if below and above:
            result = str(Ordering.EQUAL)
        elif below:
            result = str(Ordering.LESS)
        elif above:
            result = str(Ordering.GREATER)
        else:
            result = "incomparable"
    else:
        result = str(squashed_cmp(u, v))
    ctx.emit(result, {"order": "borel" if args.borel else "squashed", "result": result})
    return EXIT_OK


# ---------------------------------------------------------------- compression


@register_command("compress", "压缩 C(F) 或 C_{>k}(F)", INPUT, arg("--above", type=int, default=0, metavar="K"))
def cmd_compress(ctx: CommandContext, args: argparse.Namespace) -> int:
    family = _read_family(args)
    return _emit_family(ctx, compress_above(family, args.above) if args.above else compress(family))


@register_command("partial left", "左部分压缩 C^(l)(F)", INPUT)
def cmd_partial_left(ctx: CommandContext, args: argparse.Namespace) -> int:
    return _emit_family(ctx, left_compress(_read_family(args)))


@register_command("partial right", "右部分压缩 C^(r)(F)", INPUT)
def cmd_partial_right(ctx: CommandContext, args: argparse.Namespace) -> int:
    return _emit_family(ctx, right_compress(_read_family(args)))


@register_command(
    "fixpoint",
    "交替部分压缩直到稳定，得到 F^(∞)",
    INPUT,
    arg("--trace", action="store_true", help="输出整个迭代序列和 |Inc| 的下降链"),
    arg("--max-iterations", type=int, default=None),
)
def cmd_fixpoint(ctx: CommandContext, args: argparse.Namespace) -> int:
    family = _read_family(args)
    cap = args.max_iterations if args.max_iterations is not None else ctx.config.fixpoint.max_iterations
    trace = fixpoint_trace(family, cap or None)
    if not args.trace:
        return _emit_family(ctx, trace[-1])
    sizes = descent_chain(family, cap or None)
    lines = [f"F^({k}) = {g}  |Inc| = {size}" for k, (g, size) in enumerate(zip(trace, sizes))]
    lines.append(f"C(F) = {compress(family)}  |Inc| = {sizes[-1]}")
    ctx.emit(
        "\n".join(lines),
        {"trace": [g.to_lists() for g in trace], "fixpoint": family_to_json(trace[-1]), "inc_sizes": sizes},
    )
    return EXIT_OK


# ---------------------------------------------------------------- numeric


@register_command("numeric shadow", "∂_d(m)", M_ARG, D_ARG)
def cmd_numeric_shadow(ctx: CommandContext, args: argparse.Namespace) -> int:
    value = shadow_num(args.m, args.d)
    ctx.emit(str(value), value)
    return EXIT_OK


@register_command("numeric inc", "Inc^[d](m)", M_ARG, D_ARG)
def cmd_numeric_inc(ctx: CommandContext, args: argparse.Namespace) -> int:
    value = inc_num(args.m, args.d)
    ctx.emit(str(value), value)
    return EXIT_OK


@register_command("fvector check", "Kruskal-Katona 可行性", INPUT)
def cmd_fvector_check(ctx: CommandContext, args: argparse.Namespace) -> int:
    result = kk_feasible(parse_fvector(_read_input(args)))
    text = "feasible" if result else f"infeasible: {result.violation}"
    ctx.emit(text, {"ok": result.ok, "violation": None if result else str(result.violation)})
    return EXIT_OK if result else EXIT_VIOLATION


# ---------------------------------------------------------------- chains and complexes


@register_command("chain check", "检查 f-向量链或复形链", INPUT)
def cmd_chain_check(ctx: CommandContext, args: argparse.Namespace) -> int:
    kind, chain = parse_chain(_read_input(args))
    result = chain_feasible(chain) if kind == "fvectors" else check_chain(chain)
    text = "ok" if result else f"violation: {result.violation}"
    ctx.emit(text, {"kind": kind, "ok": result.ok, "violation": None if result else str(result.violation)})
    return EXIT_OK if result else EXIT_VIOLATION


@register_command("chain construct", "由 f-向量链构造压缩复形链", INPUT)
def cmd_chain_construct(ctx: CommandContext, args: argparse.Namespace) -> int:
    kind, chain = parse_chain(_read_input(args))
    if kind != "fvectors":
        raise InputFormatError("$: chain construct 需要 f-向量链")
    try:
        complexes = construct_chain(chain)
    except InfeasibleChainError as e:
        ctx.emit(f"infeasible: {e.violation}", {"ok": False, "violation": str(e.violation)})
        return EXIT_VIOLATION
    _emit_complexes(ctx, complexes)
    return EXIT_OK


def _emit_complexes(ctx: CommandContext, complexes: Sequence) -> None:
    ctx.emit(
        "\n".join(f"Δ_{n} = {c}" for n, c in enumerate(complexes, start=1)),
        [complex_to_json(c) for c in complexes],
    )


@register_command("chain stabilize", "逐步报告 Inc(Δ_n) 是否等于 Δ_{n+1}", INPUT)
def cmd_chain_stabilize(ctx: CommandContext, args: argparse.Namespace) -> int:
    kind, chain = parse_chain(_read_input(args))
    if kind != "complexes":
        raise InputFormatError("$: chain stabilize 需要复形链")
    try:
        flags = stabilization_report(chain)
    except NonInvariantChainError as e:
        ctx.emit(f"not invariant: {e.chain_break}", {"ok": False, "violation": str(e.chain_break)})
        return EXIT_VIOLATION
    lines = [f"n={n}: {'equal' if flag else 'strict'}" for n, flag in enumerate(flags, start=1)]
    ctx.emit("\n".join(lines), flags)
    return EXIT_OK


@register_command("chain iterate", "Δ, Inc(Δ), ..., Inc^t(Δ)", INPUT, arg("--steps", type=int, required=True))
def cmd_chain_iterate(ctx: CommandContext, args: argparse.Namespace) -> int:
    if args.steps < 0:
        raise PreconditionError(f"迭代次数必须 ≥ 0: {args.steps}")
    _emit_complexes(ctx, inc_chain(parse_complex(_read_input(args)), args.steps + 1))
    return EXIT_OK


@register_command("complex closure", "检查包含封闭性", INPUT)
def cmd_complex_closure(ctx: CommandContext, args: argparse.Namespace) -> int:
    try:
        parse_complex(_read_input(args))
    except ComplexClosureError as e:
        ctx.emit(f"missing face {e.missing_face}", {"ok": False, "missing_face": list(e.missing_face.elements)})
        return EXIT_VIOLATION
    ctx.emit("closed", {"ok": True, "missing_face": None})
    return EXIT_OK


@register_command("complex fvector", "f-向量", INPUT)
def cmd_complex_fvector(ctx: CommandContext, args: argparse.Namespace) -> int:
    f = f_vector(parse_complex(_read_input(args)))
    ctx.emit(str(f), fvector_to_json(f))
    return EXIT_OK


@register_command("complex inc", "Inc(Δ)", INPUT)
def cmd_complex_inc(ctx: CommandContext, args: argparse.Namespace) -> int:
    image = inc_complex(parse_complex(_read_input(args)))
    ctx.emit(str(image), complex_to_json(image))
    return EXIT_OK


@register_command("complex compress", "逐阶压缩 C(Δ)", INPUT)
def cmd_complex_compress(ctx: CommandContext, args: argparse.Namespace) -> int:
    compressed = compress_complex(parse_complex(_read_input(args)))
    ctx.emit(str(compressed), complex_to_json(compressed))
    return EXIT_OK


@register_command("complex nonfaces", "[n] 中的非面", INPUT, arg("--n", type=int, required=True))
def cmd_complex_nonfaces(ctx: CommandContext, args: argparse.Namespace) -> int:
    graded = non_faces(parse_complex(_read_input(args)), args.n)
    ctx.emit(
        "\n".join(f"d={d}: {family}" for d, family in graded.items()),
        {"grades": {str(d): family.to_lists() for d, family in graded.items()}},
    )
    return EXIT_OK


# ---------------------------------------------------------------- verification


def _sweep_arguments(default_n: str, default_d: str) -> List[Argument]:
    return [
        arg("--n", type=int, default=None, help=f"默认取配置 {default_n}"),
        arg("--d", type=int, default=None, help=f"默认取配置 {default_d}"),
        arg("--m", type=int, default=None, help="只扫描大小为 m 的族"),
        arg("--all-m", action="store_true", help="扫描所有大小"),
        arg("--jobs", type=int, default=None, help=f"并行进程数，默认取 {JOBS_ENV} 或配置"),
        arg("--partition-bits", type=int, default=None),
        arg("--max-witnesses", type=int, default=None),
    ]


def _sweep_bounds(ctx: CommandContext, args: argparse.Namespace) -> Dict[str, Any]:
    verify = ctx.config.verify
    if args.m is None and not (args.all_m or verify.all_m):
        raise PreconditionError("需要 --m 或 --all-m（或在配置中设置 verify.all_m = true）")
    return {
        "n": verify.n if args.n is None else args.n,
        "d": verify.d if args.d is None else args.d,
        "m": None if args.all_m else args.m,
        "jobs": resolve_jobs(args.jobs, ctx.config),
        "partition_bits": verify.partition_bits if args.partition_bits is None else args.partition_bits,
        "max_witnesses": verify.max_witnesses if args.max_witnesses is None else args.max_witnesses,
    }


def _report_table(report: VerificationReport) -> Table:
    table = Table(title=f"{report.kind} {report.universe}")
    table.add_column("m", justify="right")
    table.add_column("min", justify="right")
    table.add_column("bound", justify="right")
    table.add_column("C(F)", justify="right")
    table.add_column("minimizers", justify="right")
    table.add_column("attained")
    attained = report.bound_attained
    compressed_ok = report.compressed_is_minimizer
    for m in sorted(report.minimum):
        table.add_row(
            str(m),
            str(report.minimum[m]),
            str(report.bound.get(m, "")),
            str(report.compressed.get(m, "")),
            str(report.minimizer_count[m]),
            "yes" if attained.get(m) and compressed_ok.get(m, True) else "no",
        )
    return table


def _emit_report(ctx: CommandContext, report: VerificationReport) -> int:
    if ctx.json:
        ctx.emit("", report.to_dict(include_elapsed=ctx.timing))
    else:
        console = Console(file=sys.stdout, highlight=False, soft_wrap=True)
        if report.minimum:
            console.print(_report_table(report))
        for violation in report.violations:
            console.print(f"violation: {violation}", markup=False)
        status = "verified" if report.ok else "FAILED"
        console.print(f"{status}: checked={report.checked} violations={report.violation_count}", markup=False)
        if ctx.timing:
            console.print(f"elapsed={report.elapsed:.3f}s", markup=False)
    return EXIT_OK if report.ok else EXIT_VIOLATION


@register_command("verify main", "|Inc(F)| ≥ |Inc(C(F))| 的穷举验证", *_sweep_arguments("verify.n", "verify.d"))
def cmd_verify_main(ctx: CommandContext, args: argparse.Namespace) -> int:
    return _emit_report(ctx, verify_min_theorem(**_sweep_bounds(ctx, args)))


@register_command("verify shadow", "Kruskal-Katona 影子定理的穷举验证", *_sweep_arguments("verify.n", "verify.d"))
def cmd_verify_shadow(ctx: CommandContext, args: argparse.Namespace) -> int:
    return _emit_report(ctx, verify_shadow_theorem(**_sweep_bounds(ctx, args)))


@register_command(
    "verify identities",
    "部分压缩复合恒等式（给出 --input 时只检查该族）",
    arg("-i", "--input", default=None),
    arg("--samples", type=int, default=None),
    arg("--seed", type=int, default=None),
    arg("--grades", type=int, nargs="+", default=None),
    arg("--max-elem", type=int, default=None),
)
def cmd_verify_identities(ctx: CommandContext, args: argparse.Namespace) -> int:
    if args.input is not None:
        failures = identity_failures(_read_family(args))
        ctx.emit("verified" if not failures else "failed: " + ", ".join(failures), {"failures": failures})
        return EXIT_VIOLATION if failures else EXIT_OK
    identities = ctx.config.identities
    report = verify_identity_sweep(
        samples=identities.samples if args.samples is None else args.samples,
        seed=identities.seed if args.seed is None else args.seed,
        grades=identities.grades if args.grades is None else args.grades,
        max_elem=identities.max_elem if args.max_elem is None else args.max_elem,
    )
    return _emit_report(ctx, report)


@register_command(
    "verify segments",
    "Inc(C(u)) = C(u+1) 与 Inc(B(u)) = B(u+1)",
    arg("--max-elem", type=int, default=None),
    arg("--max-d", type=int, default=None),
)
def cmd_verify_segments(ctx: CommandContext, args: argparse.Namespace) -> int:
    segments = ctx.config.segments
    report = verify_segment_lemmas(
        segments.max_elem if args.max_elem is None else args.max_elem,
        segments.max_d if args.max_d is None else args.max_d,
    )
    return _emit_report(ctx, report)


@register_command(
    "verify equality",
    "所有 |Inc(F)| = Inc^[d](m) 的族",
    arg("--n", type=int, required=True),
    arg("--d", type=int, required=True),
    arg("--m", type=int, required=True),
)
def cmd_verify_equality(ctx: CommandContext, args: argparse.Namespace) -> int:
    cases = equality_cases(args.n, args.d, args.m)
    lines = [f"{len(cases)} families with |Inc(F)| = {inc_num(args.m, args.d)}"]
    lines.extend(str(f) for f in cases)
    ctx.emit("\n".join(lines), [f.to_lists() for f in cases])
    return EXIT_OK


@register_command(
    "verify structure",
    "Inc 保持 shifted 与 compressed",
    arg("--n", type=int, default=None),
    arg("--d", type=int, default=None),
)
def cmd_verify_structure(ctx: CommandContext, args: argparse.Namespace) -> int:
    verify = ctx.config.verify
    n = verify.n if args.n is None else args.n
    d = verify.d if args.d is None else args.d
    return _emit_report(ctx, verify_structure_preservation(n, d))


@register_command(
    "search shift-noninclusion",
    "找 Inc(S_i(F)) 与 S_i(Inc(F)) 互不包含的 (F, i)",
    arg("--n", type=int, default=None),
    arg("--d", type=int, default=None),
    arg("--max-m", type=int, default=None),
)
def cmd_search_shift(ctx: CommandContext, args: argparse.Namespace) -> int:
    search = ctx.config.search
    n = search.n if args.n is None else args.n
    d = search.d if args.d is None else args.d
    max_m = search.max_m if args.max_m is None else args.max_m
    witness = find_shift_witness(n, d, max_m)
    shadow_failures = 0
    if d >= 2:
        for m in range(max_m + 1):
            shadow_failures += verify_shift_shadow(n, d, m).violation_count
    if witness is None:
        text = f"no witness within n={n}, d={d}, m ≤ {max_m}"
    else:
        text = (
            f"F = {witness.family}, i = {witness.i}\n"
            f"Inc(S_i(F)) = {witness.inc_of_shift}\n"
            f"S_i(Inc(F)) = {witness.shift_of_inc}"
        )
    text += f"\nshadow shifting failures: {shadow_failures}"
    ctx.emit(
        text,
        {"witness": None if witness is None else witness.to_dict(), "shift_shadow_failures": shadow_failures},
    )
    return EXIT_OK if witness is not None and shadow_failures == 0 else EXIT_VIOLATION


# ---------------------------------------------------------------- config


@register_command(
    "config init",
    "从模板创建配置文件",
    arg("path", nargs="?", default="config.toml"),
    arg("--force", action="store_true", help="覆盖已有文件"),
)
def cmd_config_init(ctx: CommandContext, args: argparse.Namespace) -> int:
    written = init_config(args.path, overwrite=args.force)
    ctx.emit(f"{'created' if written else 'exists'}: {args.path}", {"path": args.path, "created": written})
    return EXIT_OK


@register_command("config show", "打印当前生效的配置")
def cmd_config_show(ctx: CommandContext, args: argparse.Namespace) -> int:
    ctx.emit(dump_config(ctx.config).rstrip("\n"), ctx.config.to_dict())
    return EXIT_OK


# ---------------------------------------------------------------- parser


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="输出 JSON")
    common.add_argument("--config", default=None, help="TOML 配置文件路径")
    common.add_argument("--log-level", default=None, help="覆盖配置中的日志级别")
    common.add_argument("--timing", action="store_true", help="在报告中包含耗时")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="inc-kk", description="Inc₁-像最小化与 Kruskal-Katona 型工具")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = _common_options()
    top = parser.add_subparsers(dest="command", required=True)
    groups: Dict[str, argparse._SubParsersAction] = {}
    for name, info in _command_handlers.items():
        head, _, tail = name.partition(" ")
        if tail:
            if head not in groups:
                group_parser = top.add_parser(head, help=_GROUP_HELP.get(head))
                groups[head] = group_parser.add_subparsers(dest="subcommand", required=True)
            sub = groups[head].add_parser(tail, help=info["help"], parents=[common])
        else:
            sub = top.add_parser(head, help=info["help"], parents=[common])
        for flags, kwargs in info["arguments"]:
            sub.add_argument(*flags, **kwargs)
        sub.set_defaults(handler=info["handler"])
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """解析参数并执行子命令，返回退出码"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        if args.config:
            global_config.load(args.config)
        else:
            global_config.reset()
        config = global_config.config
        setup_logger(args.log_level or config.debug.level, config.debug.log_to_file)
    except (OSError, ValueError, TypeError) as e:
        sys.stderr.write(f"配置错误: {e}\n")
        return EXIT_USAGE

    ctx = CommandContext(json=args.json, timing=args.timing, config=config)
    try:
        return args.handler(ctx, args)
    except IncKKError as e:
        logger.error(f"{type(e).__name__}: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE


def main() -> None:
    from rich.traceback import install

    install()
    sys.exit(run())
