# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""CLI for ferkit."""

import functools
import logging
import os
from dataclasses import replace

import click
import sentry_sdk

from ferkit import config
from ferkit.checks import GRADCHECK_CASES, run_gradcheck
from ferkit.datasets import assemble_split, write_arrays
from ferkit.errors import FerKitException
from ferkit.models import ARCHITECTURES, VARIANTS, audit, count_params, \
    get_spec, ledger_ratio, load_checkpoint
from ferkit.training import DATASETS, EXPERIMENTS, HISTORY_FORMAT, \
    TrainConfig, apply_experiment, evaluate, format_report, \
    get_experiment, load_dataset, multi_run, train, write_report
from ferkit.training.reports import format_confusion
from ferkit.utils import attach_file_handler, detach_file_handlers

CONSOLE_FORMAT = "%(levelname)s %(name)s: %(message)s"


class ClickHandler(logging.Handler):
    """Log through click so output follows the current stderr."""

    def emit(self, record):
        """Echo the formatted record."""
        try:
            click.echo(self.format(record), err=True)
        except Exception:
            self.handleError(record)


def handle_errors(command):
    """Report ferkit errors in red and exit with status 1."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except FerKitException as exc:
            click.secho("ERROR: {0}".format(exc), fg="red", err=True)
            click.get_current_context().exit(1)
    return wrapper


def model_options(command):
    """Architecture and input variant options."""
    options = [
        click.option("--arch", type=click.Choice(sorted(ARCHITECTURES)),
                     default="base", show_default=True),
        click.option("--variant", type=click.Choice(sorted(VARIANTS)),
                     default="plain", show_default=True),
        click.option("--stl", is_flag=True,
                     help="Prepend a spatial transformer to every stream."),
        click.option("--share-streams", is_flag=True,
                     help="Share backbone rows between parallel streams."),
        click.option("--input-size", type=int, default=None,
                     help="Side of the square model input."),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def training_options(command):
    """Dataset and optimization options."""
    options = [
        click.option("--dataset", type=click.Choice(DATASETS),
                     default="ferplus", show_default=True),
        click.option("--data-dir", type=click.Path(file_okay=False),
                     help="Directory with the dataset files."),
        click.option("--out", type=click.Path(file_okay=False),
                     help="Output directory."),
        click.option("--seed", type=int, default=config.FERKIT_SEED,
                     show_default=True),
        click.option("--lr", type=float, default=config.FERKIT_LEARNING_RATE,
                     show_default=True),
        click.option("--batch", type=int, default=config.FERKIT_BATCH_SIZE,
                     show_default=True),
        click.option("--epochs", type=int, default=config.FERKIT_EPOCHS,
                     show_default=True),
        click.option("--samples-per-class", type=int, default=None,
                     help="Training samples per class of synthetic sets."),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def make_config(**options):
    """TrainConfig from command options; ``--data-dir`` checked."""
    cfg = TrainConfig(
        arch=options["arch"], variant=options["variant"],
        stl=options["stl"], share_streams=options["share_streams"],
        dataset=options["dataset"], data_dir=options["data_dir"],
        out=options["out"], input_size=options["input_size"],
        lr=options["lr"], batch_size=options["batch"],
        epochs=options["epochs"], seed=options["seed"],
        samples_per_class=options["samples_per_class"],
    )
    check_data_dir(cfg)
    return cfg


def check_data_dir(cfg):
    """File datasets need ``--data-dir``."""
    if cfg.needs_data_dir and not cfg.data_dir:
        raise click.UsageError(
            "--data-dir is required for the {0} dataset".format(cfg.dataset)
        )


def _history_file(out):
    if not out:
        return
    os.makedirs(out, exist_ok=True)
    attach_file_handler(
        "ferkit.history", os.path.join(out, config.FERKIT_HISTORY_FILE),
        HISTORY_FORMAT,
    )


@click.group()
def ferkit():
    """Gradient and Laplacian augmented facial emotion recognition."""
    logger = logging.getLogger("ferkit")
    logger.setLevel(config.FERKIT_LOG_LEVEL)
    if not any(isinstance(h, ClickHandler) for h in logger.handlers):
        handler = ClickHandler()
        handler.setFormatter(logging.Formatter(CONSOLE_FORMAT))
        logger.addHandler(handler)
    if config.FERKIT_SENTRY_DSN:
        sentry_sdk.init(dsn=config.FERKIT_SENTRY_DSN)


@ferkit.command("count-params")
@model_options
@click.option("--classes", type=int, default=8, show_default=True)
@handle_errors
def count_params_command(arch, variant, stl, share_streams, input_size,
                         classes):
    """Print the parameter ledger of an architecture."""
    spec = get_spec(arch, variant=variant, stl=stl, num_classes=classes,
                    input_size=input_size, share_streams=share_streams)
    click.echo(count_params(spec).format_table())


@ferkit.command("audit")
@handle_errors
def audit_command():
    """Check the base ledger against its expected per-row counts."""
    failed = False
    for label, expected, actual in audit():
        passed = expected == actual
        failed = failed or not passed
        click.secho(
            "{0} {1}: expected {2}, got {3}".format(
                "PASS" if passed else "FAIL", label, expected, actual
            ),
            fg="green" if passed else "red",
        )
    base = count_params(get_spec("base"))
    vgg13 = count_params(get_spec("vgg13"))
    click.echo("vgg13/base parameter ratio {0:.2f} ({1} / {2})".format(
        ledger_ratio(vgg13, base), vgg13.total, base.total
    ))
    if failed:
        click.get_current_context().exit(1)


@ferkit.command("gradcheck")
@click.option("--op", "ops", multiple=True,
              type=click.Choice(list(GRADCHECK_CASES)),
              help="Restrict the suite to these cases.")
@click.option("--seeds", type=int, default=config.FERKIT_GRADCHECK_SEEDS,
              show_default=True)
@handle_errors
def gradcheck_command(ops, seeds):
    """Run the finite-difference gradient suite."""
    results = run_gradcheck(names=ops or None, seeds=seeds)
    for result in results:
        click.secho(
            "{0} {1} max relative error {2:.3e} over {3} seeds".format(
                "PASS" if result.passed else "FAIL", result.name,
                result.worst, result.seeds,
            ),
            fg="green" if result.passed else "red",
        )
    if not all(result.passed for result in results):
        click.get_current_context().exit(1)


@ferkit.command("preprocess")
@model_options
@training_options
@handle_errors
def preprocess_command(**options):
    """Write assembled variant inputs to ``<out>/<split>.npz``."""
    if not options["out"]:
        raise click.UsageError("--out is required")
    cfg = make_config(**options)
    split = load_dataset(cfg)
    spec = cfg.spec(split.num_classes)
    assembled = assemble_split(split, cfg.variant, size=spec.input_shape[0])
    written = write_arrays(
        assembled, cfg.out, streams=spec.streams or ("input",)
    )
    for name, path in written.items():
        click.echo("{0}: {1} samples -> {2}".format(
            name, len(assembled.part(name)), path
        ))


@ferkit.command("train")
@model_options
@training_options
@handle_errors
def train_command(**options):
    """Train one model, keeping the best validation checkpoint."""
    cfg = make_config(**options)
    _history_file(cfg.out)
    try:
        split = load_dataset(cfg)
        result = train(cfg, split)
    finally:
        detach_file_handlers("ferkit.history")
    click.echo("best epoch {0}, validation accuracy {1:.2f}".format(
        result.best_epoch, result.best_accuracy
    ))
    if result.split.test and result.best_epoch:
        scored = evaluate(result.model, result.split.test, cfg.batch_size,
                          cfg.dtype)
        click.echo("test accuracy {0:.2f}".format(scored.accuracy))


@ferkit.command("eval")
@click.option("--checkpoint", required=True,
              type=click.Path(exists=True, file_okay=False))
@click.option("--dataset", type=click.Choice(DATASETS), default="ferplus",
              show_default=True)
@click.option("--data-dir", type=click.Path(file_okay=False))
@click.option("--split", "split_name", default="test", show_default=True,
              type=click.Choice(["train", "validation", "test"]))
@click.option("--batch", type=int, default=config.FERKIT_BATCH_SIZE,
              show_default=True)
@click.option("--samples-per-class", type=int, default=None)
@handle_errors
def eval_command(checkpoint, dataset, data_dir, split_name, batch,
                 samples_per_class):
    """Evaluate a checkpoint on one split of a dataset."""
    model = load_checkpoint(checkpoint)
    spec = model.spec
    cfg = TrainConfig(
        arch=spec.name, variant=spec.variant, dataset=dataset,
        data_dir=data_dir, input_size=spec.input_shape[0],
        samples_per_class=samples_per_class, batch_size=batch,
    )
    check_data_dir(cfg)
    split = load_dataset(cfg)
    if split.num_classes != model.num_classes:
        raise click.UsageError(
            "The checkpoint has {0} classes, the {1} dataset {2}".format(
                model.num_classes, dataset, split.num_classes
            )
        )
    assembled = assemble_split(split, spec.variant, size=spec.input_shape[0])
    scored = evaluate(model, assembled.part(split_name), batch,
                      str(model.parameters()[0].dtype))
    click.echo("{0} accuracy {1:.2f} on {2} samples".format(
        split_name, scored.accuracy, scored.total
    ))
    click.echo(format_confusion(scored.confusion, list(split.labels)))


@ferkit.command("runs")
@model_options
@training_options
@click.option("--repeat", type=int, default=config.FERKIT_RUNS,
              show_default=True)
@click.option("--experiment", "experiment_names", multiple=True,
              type=click.Choice(list(EXPERIMENTS)),
              help="Run presets instead of the model options.")
@handle_errors
def runs_command(repeat, experiment_names, **options):
    """Train repeatedly and report avg/min/max test accuracy."""
    base = make_config(**options)
    configs = [(None, base)]
    if experiment_names:
        configs = []
        for name in experiment_names:
            experiment = get_experiment(name)
            cfg = apply_experiment(base, experiment)
            if cfg.out:
                cfg = replace(cfg, out=os.path.join(cfg.out, name))
            check_data_dir(cfg)
            configs.append((experiment.label, cfg))

    _history_file(base.out)
    reports = []
    try:
        for label, cfg in configs:
            reports.append(multi_run(cfg, runs=repeat, label=label))
    finally:
        detach_file_handlers("ferkit.history")
    click.echo(format_report(reports))
    if base.out:
        write_report(reports, base.out)


@ferkit.command("experiments")
def experiments_command():
    """List the experiment presets."""
    for experiment in EXPERIMENTS.values():
        click.echo("{0:34} {1:8} {2:6} {3:18} {4:5} {5}".format(
            experiment.name, experiment.dataset, experiment.arch,
            experiment.variant, "stl" if experiment.stl else "-",
            experiment.label,
        ))
