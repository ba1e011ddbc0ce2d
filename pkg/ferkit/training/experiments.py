# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Named experiment presets.

Each preset fixes the dataset, architecture, input variant and STL flag of
one published comparison. The KDEF comparisons use the base backbone in
every stream.
"""

from collections import OrderedDict, namedtuple
from dataclasses import replace

from ferkit.training.errors import ConfigError

Experiment = namedtuple(
    "Experiment", ["name", "group", "dataset", "arch", "variant", "stl",
                   "label"]
)

EXPERIMENTS = OrderedDict(
    (experiment.name, experiment) for experiment in (
        Experiment("kdef-plain", "kdef-streams", "kdef", "base", "plain",
                   False, "Single stream"),
        Experiment("kdef-stl", "kdef-streams", "kdef", "base", "plain",
                   True, "STL + single stream"),
        Experiment("kdef-laplacian-parallel", "kdef-streams", "kdef", "base",
                   "laplacian-parallel", False,
                   "Original + Laplacian streams"),
        Experiment("kdef-stl-sobel-parallel", "kdef-streams", "kdef", "base",
                   "sobel-parallel", True,
                   "STL, original + gradient streams"),
        Experiment("kdef-stl-laplacian-parallel", "kdef-streams", "kdef",
                   "base", "laplacian-parallel", True,
                   "STL, original + Laplacian streams"),
        Experiment("kdef-stl-triple-stream", "kdef-streams", "kdef", "base",
                   "triple-stream", True,
                   "STL, original + gradient + Laplacian streams"),
        Experiment("ferplus-vgg13", "ferplus-vgg13", "ferplus", "vgg13",
                   "plain", False, "VGG13"),
        Experiment("ferplus-vgg13-laplacian-concat", "ferplus-vgg13",
                   "ferplus", "vgg13", "laplacian-concat", False,
                   "VGG13 + Laplacian (input concatenated)"),
        Experiment("ferplus-vgg13-sobel-concat", "ferplus-vgg13", "ferplus",
                   "vgg13", "sobel-concat", False,
                   "VGG13 + Sobel (input concatenated)"),
        Experiment("ferplus-base", "ferplus-base", "ferplus", "base",
                   "plain", False, "base"),
        Experiment("ferplus-base-laplacian-concat", "ferplus-base",
                   "ferplus", "base", "laplacian-concat", False,
                   "base + Laplacian (input concatenated)"),
        Experiment("ferplus-base-sobel-concat", "ferplus-base", "ferplus",
                   "base", "sobel-concat", False,
                   "base + Sobel (input concatenated)"),
        Experiment("ferplus-base-laplacian-parallel", "ferplus-base",
                   "ferplus", "base", "laplacian-parallel", False,
                   "base + Laplacian (parallel network)"),
        Experiment("ferplus-base-sobel-parallel", "ferplus-base", "ferplus",
                   "base", "sobel-parallel", False,
                   "base + Sobel (parallel network)"),
    )
)
"""Presets by name; each group is compared in one report."""


def get_experiment(name):
    """Look up a preset by name."""
    try:
        return EXPERIMENTS[name]
    except KeyError:
        raise ConfigError(message="Unknown experiment {0}".format(name))


def experiment_group(group):
    """Presets of ``group``, in table order."""
    return [
        experiment for experiment in EXPERIMENTS.values()
        if experiment.group == group
    ]


def apply_experiment(cfg, experiment):
    """Copy of ``cfg`` with the preset's model and dataset settings."""
    return replace(
        cfg, dataset=experiment.dataset, arch=experiment.arch,
        variant=experiment.variant, stl=experiment.stl,
    )
