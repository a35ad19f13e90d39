"""Operator command line: pack validation, scripted session runs, the
HTTP server, and the survey statistics tools."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import driver, engine, stats
from .errors import LexitrainError, PackSchemaError, PackSyntaxError
from .feedback import FeedbackModality
from .lexicon import LevelRank, Severity, ValidationMode, load_pack, validate_pack
from .progress import ProgressStore
from .service import create_app, load_packs_dir
from .stats import GroupSummary


@click.group()
def main():
    """Foreign-language trainer toolkit."""


@main.command("validate-pack")
@click.argument("pack_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--canonical", is_flag=True, help="Require the full curriculum track list.")
@click.option("--audio-dir", type=click.Path(file_okay=False), default=None,
              help="Directory audio references resolve against; enables missing-file warnings.")
def validate_pack_cmd(pack_file: str, canonical: bool, audio_dir: str | None):
    """Parse and validate a pack document, printing every finding."""
    try:
        pack = load_pack(pack_file)
    except (PackSyntaxError, PackSchemaError) as exc:
        click.echo(f"ERROR {exc}", err=True)
        sys.exit(1)
    mode = ValidationMode.CANONICAL if canonical else ValidationMode.LENIENT
    report = validate_pack(pack, mode, base_dir=audio_dir)
    for finding in report.findings:
        click.echo(f"{finding.severity.value.upper():7s} {finding.location}: {finding.message}")
    if report.valid:
        click.echo(f"OK {pack.pack_id} ({mode.value.lower()} mode)")
    else:
        errors = sum(1 for f in report.findings if f.severity is Severity.ERROR)
        click.echo(f"INVALID {pack.pack_id}: {errors} error(s)", err=True)
        sys.exit(1)


@main.command("run-session")
@click.option("--pack", "pack_file", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--level", required=True, type=click.Choice([r.value for r in LevelRank]))
@click.option("--category", required=True)
@click.option("--script", "script_file", required=True, type=click.Path(exists=True, dir_okay=False),
              help="JSON array of answers: option indexes or 'correct'/'wrong'.")
@click.option("--learner", default="cli-learner", show_default=True)
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--block-size", default=5, show_default=True, type=int)
@click.option("--quiz-length", default=3, show_default=True, type=int)
@click.option("--toggle/--no-toggle", "quiz_toggle", default=True, show_default=True,
              help="Whether quiz blocks fire at all.")
@click.option("--modality", default="KR,Task,Immediate", show_default=True,
              help="Feedback configuration as TYPE,LEVEL,TIMING.")
@click.option("--data-dir", type=click.Path(file_okay=False), default=None,
              help="Progress log directory; omit for an unpersisted run.")
def run_session_cmd(pack_file, level, category, script_file, learner, seed,
                    block_size, quiz_length, quiz_toggle, modality, data_dir):
    """Drive a full session non-interactively and print the report."""
    pack = load_pack(pack_file)
    entries = json.loads(Path(script_file).read_text(encoding="utf-8"))
    try:
        f_type, f_level, timing = (part.strip() for part in modality.split(","))
        chosen_modality = FeedbackModality.from_strings(f_type, f_level, timing)
    except ValueError as exc:
        raise click.BadParameter(f"bad modality '{modality}': {exc}") from exc
    policy = engine.SchedulePolicy(
        block_size=block_size, quiz_length=quiz_length, quiz_toggle=quiz_toggle
    )
    store = ProgressStore(data_dir) if data_dir else None
    try:
        session, transcript = driver.run_full_session(
            store,
            learner,
            pack,
            LevelRank(level),
            category,
            driver.scripted(entries),
            policy=policy,
            modality=chosen_modality,
            seed=seed,
        )
    except LexitrainError as exc:
        click.echo(f"ERROR {exc.code}: {exc}", err=True)
        sys.exit(1)

    for step in transcript.steps:
        if isinstance(step, engine.PresentStep):
            click.echo(f"present  {step.item.english} -> {step.item.translation}")
        elif isinstance(step, engine.QuizStep):
            click.echo(f"quiz     {step.question.question_id} {step.question.prompt_text}")
        elif isinstance(step, engine.CategoryCompleteStep):
            click.echo("category complete")
        elif isinstance(step, engine.LevelCompleteStep):
            click.echo(f"level complete ({len(step.review_list)} words reviewed)")
    for question_id, message in transcript.feedback:
        click.echo(f"feedback {question_id}: {message.verdict.value}")
    assert session.report is not None
    click.echo(json.dumps(session.report.to_dict(), ensure_ascii=False, indent=2))


@main.command("serve")
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--packs-dir", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--data-dir", default="data", show_default=True, type=click.Path(file_okay=False))
@click.option("--ui-dir", default=None, type=click.Path(exists=True, file_okay=False),
              help="Serve a built web UI from this directory at /.")
def serve_cmd(port: int, host: str, packs_dir: str, data_dir: str, ui_dir: str | None):
    """Serve the trainer HTTP API."""
    import uvicorn

    packs = load_packs_dir(packs_dir)
    if not packs:
        click.echo(f"no packs found in {packs_dir}", err=True)
        sys.exit(1)
    store = ProgressStore(data_dir)
    app = create_app(packs, store, packs_dir=packs_dir, ui_dir=ui_dir)
    click.echo(f"serving {len(packs)} pack(s) on http://{host}:{port}")
    uvicorn.run(app, host=host, port=port)


@main.group("stats")
def stats_group():
    """Survey analysis: Likert banding and one-way ANOVA."""


def _print_anova_table(rows: list[tuple[str, float, float, stats.AnovaResult]]):
    click.echo(f"{'Criteria':<16}{'Mean':>8}{'SD':>8}{'df':>6}{'F':>10}{'Sig.':>8}")
    for name, mean, sd, result in rows:
        click.echo(
            f"{name:<16}{mean:>8.4f}{sd:>8.4f}{result.df_between:>6d}"
            f"{result.f_statistic:>10.3f}{result.p_value:>8.3f}"
        )
        click.echo(f"{'':<16}{'':>8}{'':>8}{result.df_within:>6d}")
        click.echo(f"{'':<16}{'':>8}{'':>8}{result.df_between + result.df_within:>6d}")


@stats_group.command("anova")
@click.option("--input", "input_file", required=True, type=click.Path(exists=True, dir_okay=False),
              help="CSV with columns group,criterion,rating (one row per response).")
@click.option("--criterion", default=None, help="Analyze one criterion only.")
@click.option("--json", "as_json", is_flag=True, help="Emit results as JSON.")
def anova_cmd(input_file: str, criterion: str | None, as_json: bool):
    """One-way ANOVA from raw survey rows, grouped per criterion."""
    import csv
    from collections import defaultdict

    by_criterion: dict[str, dict[str, list[float]]] = defaultdict(lambda: defaultdict(list))
    with open(input_file, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            by_criterion[row["criterion"]][row["group"]].append(float(row["rating"]))

    names = [criterion] if criterion else sorted(by_criterion)
    rows = []
    payload = {}
    for name in names:
        groups = by_criterion.get(name)
        if not groups:
            click.echo(f"no rows for criterion '{name}'", err=True)
            sys.exit(1)
        scores = [g for _, g in sorted(groups.items())]
        try:
            result = stats.one_way_anova(scores)
        except LexitrainError as exc:
            click.echo(f"ERROR {exc.code}: {exc}", err=True)
            sys.exit(1)
        flat = [x for g in scores for x in g]
        overall = stats.summarize(flat)
        rows.append((name, overall.mean, overall.sd, result))
        payload[name] = {
            "mean": overall.mean,
            "sd": overall.sd,
            "band": stats.likert_band(overall.mean) if 1.0 <= overall.mean <= 5.0 else None,
            **result.to_dict(),
        }
    if as_json:
        click.echo(json.dumps(payload, indent=2))
    else:
        _print_anova_table(rows)


@stats_group.command("anova-summary")
@click.option("--groups", "groups_text", required=True,
              help="Semicolon-separated n,mean,sd triples, e.g. '59,4.32,0.65;25,3.95,0.56'.")
@click.option("--json", "as_json", is_flag=True, help="Emit the result as JSON.")
def anova_summary_cmd(groups_text: str, as_json: bool):
    """One-way ANOVA from published (n, mean, sd) group summaries."""
    summaries = []
    for chunk in groups_text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            n_text, mean_text, sd_text = chunk.split(",")
            summaries.append(
                GroupSummary(n=int(n_text), mean=float(mean_text), sd=float(sd_text))
            )
        except ValueError as exc:
            raise click.BadParameter(f"bad group '{chunk}': {exc}") from exc
    try:
        result = stats.anova_from_summary(summaries)
    except LexitrainError as exc:
        click.echo(f"ERROR {exc.code}: {exc}", err=True)
        sys.exit(1)
    if as_json:
        click.echo(json.dumps(result.to_dict(), indent=2))
    else:
        click.echo(f"df between {result.df_between}, within {result.df_within}")
        click.echo(f"F = {result.f_statistic:.3f}")
        click.echo(f"Sig. = {result.p_value:.4f}")


if __name__ == "__main__":
    main()
