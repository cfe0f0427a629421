"""Reading and writing instance documents.

An instance is a single JSON document holding one ambient dimension, the
anchor tuple, a frame, and optionally a second frame, named operators on
induced coordinates, and named ambient vectors.  Floats survive a
write/read cycle bit-for-bit (shortest round-trip decimal form).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import InstanceFormatError
from .frames import FrameSystem
from .nspace import AnchorSet, InducedSpace, build_induced_space

__all__ = [
    "Instance",
    "load_instance",
    "loads_instance",
    "save_instance",
    "dumps_instance",
]


@dataclass(frozen=True)
class Instance:
    dimension: int
    anchors: np.ndarray
    frame: np.ndarray
    frame2: np.ndarray | None = None
    operators: dict = field(default_factory=dict)
    vectors: dict = field(default_factory=dict)

    @property
    def k(self) -> int:
        return self.dimension - self.anchors.shape[0]

    def anchor_set(self) -> AnchorSet:
        return AnchorSet(self.anchors)

    def induced_space(self) -> InducedSpace:
        return build_induced_space(self.anchor_set())

    def frame_system(self, space: InducedSpace) -> FrameSystem:
        return FrameSystem(space=space, vectors=self.frame)

    def frame2_system(self, space: InducedSpace) -> FrameSystem:
        if self.frame2 is None:
            raise InstanceFormatError("instance has no second frame")
        return FrameSystem(space=space, vectors=self.frame2)


def _check_rows(name, rows, d, allow_empty=False):
    arr = np.asarray(rows, dtype=float)
    if arr.ndim != 2 or (arr.shape[0] == 0 and not allow_empty):
        raise InstanceFormatError(f"{name} must be a non-empty list of vectors")
    if arr.shape[1] != d:
        raise InstanceFormatError(f"{name} rows have length {arr.shape[1]}, expected {d}")
    if not np.all(np.isfinite(arr)):
        raise InstanceFormatError(f"{name} contains non-finite entries")
    return arr


def from_dict(doc: dict) -> Instance:
    if not isinstance(doc, dict):
        raise InstanceFormatError("instance document must be a JSON object")
    try:
        d = int(doc["dimension"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceFormatError("missing or bad 'dimension' field") from exc
    if d < 2:
        raise InstanceFormatError(f"dimension must be at least 2, got {d}")
    if "anchors" not in doc or "frame" not in doc:
        raise InstanceFormatError("instance needs 'anchors' and 'frame' fields")
    try:
        anchors = _check_rows("anchors", doc["anchors"], d)
        frame = _check_rows("frame", doc["frame"], d)
        frame2 = None
        if doc.get("frame2") is not None:
            frame2 = _check_rows("frame2", doc["frame2"], d)
    except InstanceFormatError:
        raise
    except (TypeError, ValueError) as exc:
        raise InstanceFormatError(f"malformed vector table: {exc}") from exc
    if anchors.shape[0] >= d:
        raise InstanceFormatError(
            f"{anchors.shape[0]} anchors leave no induced space in dimension {d}"
        )
    k = d - anchors.shape[0]
    operators = {}
    for name, mat in (doc.get("operators") or {}).items():
        arr = np.asarray(mat, dtype=float)
        if arr.shape != (k, k):
            raise InstanceFormatError(f"operator {name!r} must be {k}x{k}, got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise InstanceFormatError(f"operator {name!r} contains non-finite entries")
        operators[name] = arr
    vectors = {}
    for name, vec in (doc.get("vectors") or {}).items():
        arr = np.asarray(vec, dtype=float)
        if arr.shape != (d,):
            raise InstanceFormatError(f"vector {name!r} must have length {d}")
        if not np.all(np.isfinite(arr)):
            raise InstanceFormatError(f"vector {name!r} contains non-finite entries")
        vectors[name] = arr
    return Instance(
        dimension=d,
        anchors=anchors,
        frame=frame,
        frame2=frame2,
        operators=operators,
        vectors=vectors,
    )


def to_dict(inst: Instance) -> dict:
    doc = {
        "dimension": inst.dimension,
        "anchors": inst.anchors.tolist(),
        "frame": inst.frame.tolist(),
    }
    if inst.frame2 is not None:
        doc["frame2"] = inst.frame2.tolist()
    if inst.operators:
        doc["operators"] = {k: np.asarray(v).tolist() for k, v in inst.operators.items()}
    if inst.vectors:
        doc["vectors"] = {k: np.asarray(v).tolist() for k, v in inst.vectors.items()}
    return doc


def loads_instance(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"not valid JSON: {exc}") from exc
    return from_dict(doc)


def load_instance(path) -> Instance:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc}") from exc
    return loads_instance(text)


def dumps_instance(inst: Instance) -> str:
    return json.dumps(to_dict(inst), indent=2)


def save_instance(path, inst: Instance) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_instance(inst))
        fh.write("\n")
