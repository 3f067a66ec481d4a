"""CLI интерфейс для cisgraphs."""

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional

import networkx as nx

from . import equistable, hasse
from .core import (
    MAX_VERTICES,
    Graph,
    encode_graph6,
    format_set,
    parse_graph6_stream,
    parse_graph_text,
    projective_split,
    random_split,
)
from .errors import CisGraphsError, InternalVerificationError
from .gallery import DESCRIPTIONS, GalleryId, gallery, gallery_big, gallery_ids
from .linegraph import (
    CisLineVerdict,
    is_cis_line_graph,
    is_cis_line_root,
    line_graph,
    root_graph,
    verify_cis_line_verdict,
)
from .properties import PropertyId, classify, verdict_from_json, verify_certificate
from .recognizers import is_cis

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2

FORMATS = ("json", "csv", "text")


class InputError(CisGraphsError):
    """Ошибка во входных данных командной строки."""


def load_graph(source: str, seed: int = 0) -> Graph:
    """
    Читает граф из источника.

    Args:
        source: путь к файлу, '-' (stdin), gallery:ID, random:K,L или projective:Q
        seed: зерно для random:K,L
    """
    kind, _, value = source.partition(":")
    if kind == "gallery" and value:
        try:
            return gallery(GalleryId.parse(value))
        except KeyError as exc:
            raise InputError(exc.args[0]) from exc
    if kind == "random" and value:
        try:
            k, l = (int(x) for x in value.split(","))
        except ValueError as exc:
            raise InputError(f"ожидалось random:K,L, получено {source}") from exc
        return random_split(k, l, seed)
    if kind == "projective" and value:
        try:
            q = int(value)
        except ValueError as exc:
            raise InputError(f"ожидалось projective:Q, получено {source}") from exc
        return projective_split(q)
    return parse_graph_text(_read_text(source))


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    path = Path(source)
    if not path.exists():
        raise InputError(f"путь {path} не существует")
    return path.read_text(encoding="utf-8")


def _parse_properties(text: Optional[str]) -> Optional[List[PropertyId]]:
    if not text:
        return None
    try:
        return [PropertyId.parse(item.strip()) for item in text.split(",") if item.strip()]
    except ValueError as exc:
        raise InputError(f"неизвестное свойство: {exc}") from exc


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    else:
        print(text)


def _dumps(data: Dict) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2)


def _yes_no(value: Optional[bool]) -> str:
    if value is None:
        return "unsupported"
    return "да" if value else "нет"


# --- classify ---

def cmd_classify(args) -> int:
    g = load_graph(args.input, args.seed)
    report = classify(g, _parse_properties(args.properties), include_lp=True, label=args.input)
    if args.verify is not None:
        status = _verify_report(g, report, args.verify)
        if status != EXIT_OK:
            return status
    if args.format == "json":
        _emit(_dumps({"schema": hasse.SCHEMA, "command": "classify", "report": report.to_json()}), args.output)
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["property", "holds", "certificate"])
        for pid, verdict in report.verdicts.items():
            kind = verdict.certificate.kind if verdict and verdict.certificate else ""
            writer.writerow([pid.key, _yes_no(report.get(pid)), kind])
        _emit(buffer.getvalue(), args.output)
    else:
        lines = [f"граф: {report.label} (n={g.n}, graph6 {encode_graph6(g)})"]
        width = max(len(pid.key) for pid in report.verdicts)
        for pid, verdict in report.verdicts.items():
            line = f"  {pid.key.ljust(width)}  {_yes_no(report.get(pid))}"
            if verdict is not None and verdict.certificate is not None and pid.modifier.value in ("plain", "co"):
                line += f"  [{verdict.certificate.kind}]"
            lines.append(line)
        lines.append(f"  плохой P4: {_yes_no(report.bad_p4.holds)}")
        _emit("\n".join(lines), args.output)
    return EXIT_OK


def _verify_report(g: Graph, report, source) -> int:
    """Перепроверка сертификатов текущего отчёта или сохранённого JSON-отчёта."""
    if source is True:
        items = [(pid, verdict) for pid, verdict in report.verdicts.items() if verdict is not None]
    else:
        data = json.loads(_read_text(source))
        properties = data.get("report", data).get("properties", {})
        items = []
        for key, entry in properties.items():
            verdict = verdict_from_json(entry)
            if verdict is not None:
                items.append((PropertyId.parse(key), verdict))
    failed = [pid.key for pid, verdict in items if not verify_certificate(g, pid, verdict)]
    if failed:
        print(f"Ошибка: сертификаты не прошли проверку: {', '.join(failed)}", file=sys.stderr)
        return EXIT_VERIFICATION
    logger.info("проверено сертификатов: %d", len(items))
    return EXIT_OK


# --- table ---

def cmd_table(args) -> int:
    report = hasse.verify_table(include_llbar=not args.skip_llbar)
    if args.format == "json":
        _emit(hasse.dumps(hasse.table_to_json(report)), args.output)
    elif args.format == "csv":
        _emit(hasse.table_to_csv(report), args.output)
    else:
        _emit(hasse.table_to_text(report), args.output)
    if not report.ok:
        print(f"Ошибка: не прошли ячейки: {', '.join(c.label for c in report.failures)}", file=sys.stderr)
        return EXIT_VERIFICATION
    return EXIT_OK


# --- scan ---

def cmd_scan(args) -> int:
    graphs = None
    if args.graphs:
        graphs = list(parse_graph6_stream(_read_text(args.graphs)))
    report = hasse.scan(
        max_n=args.max_n,
        properties=_parse_properties(args.properties),
        include_lp=True if args.include_lp else None,
        graphs=graphs,
        jobs=args.jobs,
    )
    if args.format == "json":
        _emit(hasse.dumps(report.to_json()), args.output)
    elif args.format == "csv":
        _emit(hasse.scan_to_csv(report), args.output)
    else:
        _emit(hasse.scan_to_text(report), args.output)
    if not report.ok:
        print("Ошибка: нарушены включения, см. отчёт", file=sys.stderr)
        return EXIT_VERIFICATION
    return EXIT_OK


# --- gallery ---

def cmd_gallery(args) -> int:
    if args.action == "list":
        lines = []
        for gid in gallery_ids():
            n = gallery_big(gid).number_of_nodes() if gid in (GalleryId.L, GalleryId.LLBAR) else gallery(gid).n
            lines.append(f"{gid.value:8} n={n:<4} {DESCRIPTIONS[gid]}")
        _emit("\n".join(lines), args.output)
        return EXIT_OK
    if not args.id:
        raise InputError("для gallery emit нужен идентификатор графа")
    try:
        gid = GalleryId.parse(args.id)
    except KeyError as exc:
        raise InputError(exc.args[0]) from exc
    if gid in (GalleryId.L, GalleryId.LLBAR):
        big = gallery_big(gid)
        lines = [f"n {big.number_of_nodes()}"] + list(nx.generate_edgelist(big, data=False))
        _emit("\n".join(lines), args.output)
    else:
        _emit(encode_graph6(gallery(gid)), args.output)
    return EXIT_OK


# --- cis-line ---

def cmd_cis_line(args) -> int:
    g = load_graph(args.input, args.seed)
    mode = args.mode
    if mode == "auto":
        mode = "line" if root_graph(g).is_line_graph else "root"
    data: Dict = {"schema": hasse.SCHEMA, "command": "cis-line", "input": args.input, "treated_as": mode}
    if mode == "line":
        report = is_cis_line_graph(g)
        if not report.root.is_line_graph:
            raise InputError("граф не является рёберным")
        verdict = report.verdict
        root = report.root.root
        data["root"] = {"n": root.n, "edges": [list(e) for e in root.edges()],
                        "ambiguous": report.root.ambiguous}
        data["brute_force_cis"] = report.brute_force_cis
    else:
        root = g
        verdict = is_cis_line_root(g)
        data["root"] = {"n": g.n, "edges": [list(e) for e in g.edges()], "ambiguous": False}
        # прямая проверка только пока L(g) помещается в 64 вершины
        if 0 < g.edge_count() <= MAX_VERTICES:
            data["brute_force_cis"] = is_cis(line_graph(g)).holds
        else:
            data["brute_force_cis"] = None
    if args.verify is not None:
        if args.verify is not True:
            saved = json.loads(_read_text(args.verify))
            verdict = CisLineVerdict.from_json(saved)
        if not verify_cis_line_verdict(root, verdict):
            print("Ошибка: вердикт CIS-критерия не прошёл проверку", file=sys.stderr)
            return EXIT_VERIFICATION
    data.update(verdict.to_json())
    if args.format == "json":
        _emit(_dumps(data), args.output)
    else:
        lines = [
            f"корень: n={root.n}, рёбра {data['root']['edges']}",
            f"CIS: {_yes_no(verdict.cis)}",
            f"проверенные вершины: {data['checked_vertices']}",
        ]
        if verdict.bull is not None:
            lines.append(f"бык: {list(verdict.bull)}")
        if verdict.vertex is not None:
            lines.append(f"вершина {verdict.vertex}: паросочетание {data['matching']} покрывает N(x)")
        _emit("\n".join(lines), args.output)
    return EXIT_OK


# --- equistable ---

def cmd_equistable(args) -> int:
    g = load_graph(args.input, args.seed)
    decide = equistable.is_strongly_equistable if args.strong else equistable.is_equistable
    cert = decide(g, method=args.method)
    if args.verify is not None:
        if args.verify is not True:
            cert = equistable.EquistableCertificate.from_json(json.loads(_read_text(args.verify)))
        if not equistable.verify_certificate(g, cert):
            print("Ошибка: сертификат равностабильности не прошёл проверку", file=sys.stderr)
            return EXIT_VERIFICATION
    if args.format == "json":
        _emit(_dumps(cert.to_json()), args.output)
    else:
        lines = [f"{'сильно ' if args.strong else ''}равностабильный: {_yes_no(cert.holds)} ({cert.reason})"]
        if cert.weights is not None:
            lines.append("веса: " + " ".join(str(w) for w in cert.weights))
        if cert.subset is not None:
            lines.append(f"вынужденное множество {format_set(cert.subset)}: φ = {cert.value}")
        _emit("\n".join(lines), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cisgraphs",
        description="Распознавание CIS, равностабильных и смежных классов графов"
    )
    parser.add_argument(
        '--verbose',
        action='store_true',
        help='Подробный журнал (уровень DEBUG)'
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def common(sub, formats=FORMATS):
        sub.add_argument('--format', choices=formats, default='text', help='Формат вывода')
        sub.add_argument('--output', '-o', type=str, help='Файл для вывода (по умолчанию stdout)')

    def graph_input(sub):
        sub.add_argument('source', nargs='?', help="Граф (то же, что --input)")
        sub.add_argument(
            '--input', '-i',
            help="Путь, '-', gallery:ID, random:K,L или projective:Q"
        )
        sub.add_argument('--seed', type=int, default=0, help='Зерно для random:K,L (по умолчанию 0)')

    sub = commands.add_parser('classify', help='Принадлежность графа всем классам')
    graph_input(sub)
    common(sub)
    sub.add_argument('--properties', help='Список свойств через запятую (например cis,cap-triangle)')
    sub.add_argument(
        '--verify',
        nargs='?',
        const=True,
        help='Перепроверить сертификаты (или сертификаты из JSON-отчёта)'
    )
    sub.set_defaults(handler=cmd_classify)

    sub = commands.add_parser('table', help='Перепроверка таблицы включений')
    common(sub)
    sub.add_argument('--skip-llbar', action='store_true', help='Не строить L и LLbar')
    sub.set_defaults(handler=cmd_table)

    sub = commands.add_parser('scan', help='Перебор всех графов до max-n вершин')
    common(sub)
    sub.add_argument('--max-n', type=int, default=6, help='Наибольшее число вершин (по умолчанию 6)')
    sub.add_argument('--include-lp', action='store_true', help='Вычислять равностабильность и при n = 7')
    sub.add_argument('--graphs', help='Файл graph6 со списком графов вместо генерации')
    sub.add_argument('--jobs', type=int, default=1, help='Число процессов (по умолчанию 1)')
    sub.add_argument('--properties', help='Список свойств через запятую')
    sub.set_defaults(handler=cmd_scan)

    sub = commands.add_parser('gallery', help='Список или вывод графов галереи')
    sub.add_argument('action', choices=['list', 'emit'])
    sub.add_argument('id', nargs='?', help='Идентификатор графа для emit')
    sub.add_argument('--output', '-o', type=str, help='Файл для вывода')
    sub.set_defaults(handler=cmd_gallery)

    sub = commands.add_parser('cis-line', help='Критерий CIS для рёберных графов')
    graph_input(sub)
    common(sub, ("json", "text"))
    sub.add_argument(
        '--mode',
        choices=['auto', 'root', 'line'],
        default='auto',
        help='Вход - корень H, рёберный граф L(H) или определить автоматически'
    )
    sub.add_argument(
        '--verify',
        nargs='?',
        const=True,
        help='Перепроверить вердикт (или вердикт из JSON-вывода cis-line)'
    )
    sub.set_defaults(handler=cmd_cis_line)

    sub = commands.add_parser('equistable', help='Равностабильность с сертификатом')
    graph_input(sub)
    common(sub, ("json", "text"))
    sub.add_argument('--strong', action='store_true', help='Проверять сильную равностабильность')
    sub.add_argument('--method', choices=[equistable.AFFINE, equistable.LP], default=equistable.AFFINE,
                     help='Метод поиска вынужденного множества')
    sub.add_argument('--verify', nargs='?', const=True, help='Перепроверить сертификат (или из файла)')
    sub.set_defaults(handler=cmd_equistable)
    return parser


def _resolve_input(args) -> None:
    """Ровно один источник графа: позиционный аргумент или --input/-i."""
    if not hasattr(args, "source"):
        return
    if args.source is not None and args.input is not None:
        raise InputError("укажите граф либо позиционно, либо через --input, но не оба")
    args.input = args.input if args.input is not None else args.source
    if args.input is None:
        raise InputError("не указан граф (--input/-i)")


def main(argv: Optional[List[str]] = None) -> int:
    """Главная функция CLI."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        _resolve_input(args)
        return args.handler(args)
    except InternalVerificationError as exc:
        print(f"Ошибка проверки: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (CisGraphsError, ValueError, OSError) as exc:
        print(f"Ошибка: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
