# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Training configuration."""

from dataclasses import asdict, dataclass, field, replace
from typing import Optional

from ferkit import config
from ferkit.models.specs import ARCHITECTURES, VARIANTS, get_spec
from ferkit.training.errors import ConfigError
from ferkit.utils import fingerprint

DATASETS = ("ferplus", "kdef", "synthetic-bars", "synthetic-directional")
"""Dataset sources; the first two read from ``data_dir``."""

FILE_DATASETS = ("ferplus", "kdef")


def _default(name):
    return field(default_factory=lambda: getattr(config, name))


@dataclass(frozen=True)
class TrainConfig(object):
    """Everything one training run depends on."""

    arch: str = "base"
    variant: str = "plain"
    stl: bool = False
    share_streams: bool = False
    dataset: str = "ferplus"
    data_dir: Optional[str] = None
    out: Optional[str] = None
    input_size: Optional[int] = None
    lr: float = _default("FERKIT_LEARNING_RATE")
    beta1: float = _default("FERKIT_ADAM_BETA1")
    beta2: float = _default("FERKIT_ADAM_BETA2")
    eps: float = _default("FERKIT_ADAM_EPSILON")
    batch_size: int = _default("FERKIT_BATCH_SIZE")
    epochs: int = _default("FERKIT_EPOCHS")
    seed: int = _default("FERKIT_SEED")
    data_seed: int = 0
    kdef_angles: str = _default("FERKIT_KDEF_ANGLES")
    samples_per_class: Optional[int] = None
    dtype: str = _default("FERKIT_DEFAULT_DTYPE")

    def __post_init__(self):
        """Check the invariants."""
        if not self.lr > 0:
            raise ConfigError(
                message="Learning rate must be > 0, got {0}".format(self.lr)
            )
        for name in ("beta1", "beta2"):
            value = getattr(self, name)
            if not 0 <= value < 1:
                raise ConfigError(
                    message="{0} must be in [0, 1), got {1}".format(
                        name, value
                    )
                )
        if not self.eps > 0:
            raise ConfigError(message="Adam epsilon must be > 0")
        if self.batch_size < 1:
            raise ConfigError(message="Batch size must be >= 1")
        if self.epochs < 0:
            raise ConfigError(message="Epochs must be >= 0")
        if self.arch not in ARCHITECTURES:
            raise ConfigError(
                message="Unknown architecture {0}".format(self.arch)
            )
        if self.variant not in VARIANTS:
            raise ConfigError(
                message="Unknown variant {0}".format(self.variant)
            )
        if self.dataset not in DATASETS:
            raise ConfigError(
                message="Unknown dataset {0}".format(self.dataset)
            )

    @property
    def needs_data_dir(self):
        """Whether the dataset is read from disk."""
        return self.dataset in FILE_DATASETS

    def spec(self, num_classes):
        """Architecture spec for a dataset with ``num_classes`` classes."""
        return get_spec(
            self.arch, variant=self.variant, stl=self.stl,
            num_classes=num_classes, input_size=self.input_size,
            share_streams=self.share_streams,
        )

    def with_seed(self, seed):
        """Copy with another training seed."""
        return replace(self, seed=seed)

    def fingerprint(self):
        """Stable hash of the settings that affect results.

        Paths are left out, so the same run in two directories agrees.
        """
        settings = asdict(self)
        settings.pop("out")
        settings.pop("data_dir")
        return fingerprint(settings)
