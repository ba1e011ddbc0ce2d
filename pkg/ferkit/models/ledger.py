# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Parameter ledger: exact per-row trainable-parameter counts.

The ledger counts convolution and dense weights plus declared biases. Batch
norm scale and shift are reported apart as auxiliary parameters.
"""

from collections import namedtuple
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List

from ferkit.models.errors import LedgerMismatchError, SpecError
from ferkit.models.fusion import fused_feature_shape, head_layer
from ferkit.models.specs import base_spec, infer_shapes
from ferkit.transformer import locnet_feature_size

BASE_LEDGER_EXPECTED = (
    480, 13856, 14016, 12480, 8208, 9360, 14016, 14016, 20160,
    52608, 52608, 52608, 77184, 301824, 0, 2048,
)
"""Per-row ledger of the base network at 64x64x1 with 8 classes."""

BASE_LEDGER_TOTAL = 645472

LedgerRow = namedtuple(
    "LedgerRow", ["name", "count", "input_shape", "c", "s", "t", "auxiliary"]
)


@dataclass
class ParamLedger(object):
    """Rows of an architecture ledger."""

    name: str
    rows: List[LedgerRow] = field(default_factory=list)

    @property
    def total(self):
        """Sum of the ledgered row counts."""
        return sum(row.count for row in self.rows)

    @property
    def auxiliary(self):
        """Sum of the auxiliary (batch norm) counts."""
        return sum(row.auxiliary for row in self.rows)

    def counts(self):
        """Ledgered count of every row."""
        return tuple(row.count for row in self.rows)

    def format_table(self):
        """Aligned plain-text table ending with the total."""
        header = ("Layer", "Parameters", "Input", "c", "s", "t")
        lines = [header]
        for row in self.rows:
            lines.append((
                row.name, str(row.count),
                "x".join(str(dim) for dim in row.input_shape),
                str(row.c) if row.c else "--",
                str(row.s) if row.s else "--",
                str(row.t) if row.t else "--",
            ))
        widths = [max(len(line[col]) for line in lines)
                  for col in range(len(header))]
        text = [
            "  ".join(cell.ljust(width) for cell, width in zip(line, widths))
            .rstrip()
            for line in lines
        ]
        text.append("Auxiliary {0}".format(self.auxiliary))
        text.append("Total {0}".format(self.total))
        return "\n".join(text)


def locnet_count(shape):
    """Ledger of a localization network fed by ``shape``."""
    height, width, channels = shape
    return (
        9 * channels * 8 + 8
        + 9 * 8 * 10 + 10
        + locnet_feature_size(height, width) * 32 + 32
        + 32 * 6 + 6
    )


def layer_counts(layer, in_shape):
    """(ledgered, auxiliary) counts of ``layer`` fed by ``in_shape``."""
    if layer.kind == "conv2d":
        count = layer.k * layer.k * in_shape[-1] * layer.c
        return count + (layer.c if layer.bias else 0), 0
    if layer.kind == "bottleneck":
        hidden = in_shape[-1] * layer.t
        count = in_shape[-1] * hidden + 9 * hidden + hidden * layer.c
        return count, 2 * (2 * hidden + layer.c)
    if layer.kind == "dense":
        features = 1
        for dim in in_shape:
            features *= dim
        return features * layer.c + (layer.c if layer.bias else 0), 0
    if layer.kind == "stl":
        return locnet_count(in_shape), 0
    return 0, 0


def _row(name, layer, in_shape):
    count, auxiliary = layer_counts(layer, in_shape)
    shown_stride = layer.s if layer.kind in ("conv2d", "bottleneck") else 0
    return LedgerRow(name, count, tuple(in_shape), layer.c, shown_stride,
                     layer.t, auxiliary)


def count_params(spec):
    """Ledger of ``spec`` computed from shapes alone, without building."""
    ledger = ParamLedger(spec.name)
    layers = spec.stream_layers()
    stem = 1 if spec.stl_enabled else 0
    feature = None
    for position, (tag, shape) in enumerate(spec.stream_shapes()):
        shapes = infer_shapes(layers, shape)
        feature = shapes[-1]
        for index, layer in enumerate(layers):
            if spec.share_streams and position and index > stem:
                continue
            name = "{0}/{1}".format(tag, layer.kind) if tag else layer.kind
            ledger.rows.append(_row(name, layer, shapes[index]))
    if spec.streams is None:
        ledger.rows.append(_row(spec.layers[-1].kind, spec.layers[-1],
                                feature))
    else:
        head = head_layer(feature, spec.num_classes)
        ledger.rows.append(_row(
            "head/{0}".format(head.kind), head,
            fused_feature_shape(feature, len(spec.streams)),
        ))
    return ledger


def audit(ledger=None):
    """Compare the base ledger with the embedded expectations.

    Returns ``(label, expected, actual)`` for the 16 rows and the total.
    """
    ledger = ledger or count_params(base_spec())
    counts = ledger.counts()
    checks = []
    for index, expected in enumerate(BASE_LEDGER_EXPECTED):
        actual = counts[index] if index < len(counts) else None
        label = "row {0:2d} {1}".format(
            index + 1, ledger.rows[index].name if actual is not None else "?"
        )
        checks.append((label, expected, actual))
    checks.append(("total", BASE_LEDGER_TOTAL, ledger.total))
    if len(counts) != len(BASE_LEDGER_EXPECTED):
        checks.append(("rows", len(BASE_LEDGER_EXPECTED), len(counts)))
    return checks


def check_ledger(ledger=None):
    """Raise ``LedgerMismatchError`` unless :func:`audit` passes."""
    failures = [
        check for check in audit(ledger) if check[1] != check[2]
    ]
    if failures:
        raise LedgerMismatchError(
            message="Ledger mismatch: {0}".format(
                ", ".join(
                    "{0} expected {1} got {2}".format(*check)
                    for check in failures
                )
            )
        )


def depsep_count(se, d, n):
    """Weights of a bias-free depthwise separable layer."""
    return se * se * d + d * n


def depsep_reduction_ratio(se, n, d=1):
    """Depthwise separable over standard convolution weight ratio.

    Equal to ``1/N + 1/Se**2`` for every ``D``:

    >>> depsep_reduction_ratio(3, 9)
    0.2222222222222222
    >>> depsep_reduction_ratio(1, 1)
    2.0
    """
    if se < 1 or n < 1 or d < 1:
        raise SpecError(
            "depsep", detail="kernel size, filters and depth must be >= 1"
        )
    closed_form = Fraction(1, n) + Fraction(1, se * se)
    direct = Fraction(depsep_count(se, d, n), se * se * d * n)
    if closed_form != direct:
        raise LedgerMismatchError(
            message="DepSep ratio mismatch for Se={0}, D={1}, N={2}".format(
                se, d, n
            )
        )
    return float(closed_form)


def ledger_ratio(numerator, denominator):
    """Ratio of two ledger totals."""
    return numerator.total / denominator.total
