#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Conversion between domain values and their JSON files.

to_model / from_model dispatch on the value (or model) type; dumps, loads
and load wrap them with JSON text and files. Every emitted file loads back
to an equal value.

Example:
    >>> loads(dumps(get_group("S3")), GroupModel) == get_group("S3")
    True
"""

import logging
from functools import singledispatch
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Type, TypeVar, Union

from pydantic import BaseModel

from .actions import DiscreteHomotopyAction, RigidAction
from .bar import BarComplex
from .catalog import get_group
from .crossed import CrossedModule, TruncatedSimplicialGroup, gamma_from_cm, make_crossed_module
from .errors import InputError
from .groups import (
    FiniteGroup,
    GroupActionOnGroup,
    GroupHom,
    RightGSet,
    validate_action,
    validate_group,
    validate_hom,
    validate_right_action,
)
from .models import (
    CrossedModuleModel,
    FinSetMapModel,
    GammaModel,
    GroupModel,
    GroupRef,
    HomModel,
    HomotopyActionModel,
    RightGSetModel,
    RigidActionModel,
    SimplicialSetModel,
)
from .reports import Report
from .simplicial import FinSetMap, SimplicialMap, TruncatedSimplicialSet, make_simplicial_set

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)
PathLike = Union[str, Path]


# Groups
# ------

def resolve_group(ref: GroupRef, base_dir: Optional[Path] = None) -> FiniteGroup:
    """
    A group from an embedded model, a group file path, or a catalog name, tried in that order.

    Raises:
        UnknownGroup: a string that is neither an existing file nor a catalog name
    """
    if isinstance(ref, GroupModel):
        return group_from_model(ref)
    path = Path(ref) if base_dir is None else base_dir / ref
    if path.is_file():
        return load(path, GroupModel)
    return get_group(ref)


def read_group(source: str) -> FiniteGroup:
    """A catalog name or a path to a group file."""
    return resolve_group(source)


# Model conversion
# ----------------

@singledispatch
def to_model(value: Any) -> BaseModel:
    raise InputError(f"no file format for {type(value).__name__}")


@to_model.register
def _(value: FiniteGroup) -> GroupModel:
    return GroupModel(
        name=value.name,
        order=value.order,
        identity=value.identity,
        table=value.rows(),
        labels=list(value.labels) or None,
    )


@to_model.register
def _(value: GroupHom) -> HomModel:
    return HomModel(source=to_model(value.source), target=to_model(value.target), map=list(value.map))


@to_model.register
def _(value: CrossedModule) -> CrossedModuleModel:
    return CrossedModuleModel(
        boundary=to_model(value.boundary),
        action=[list(row) for row in value.action.act],
    )


@to_model.register
def _(value: RightGSet) -> RightGSetModel:
    return RightGSetModel(
        group=to_model(value.group),
        carrier_size=value.carrier_size,
        action=[list(row) for row in value.act],
    )


@to_model.register
def _(value: FinSetMap) -> FinSetMapModel:
    return FinSetMapModel(domain=value.domain_size, codomain=value.codomain_size, map=list(value.map))


@to_model.register
def _(value: TruncatedSimplicialSet) -> SimplicialSetModel:
    labels = None
    if value.labels is not None:
        labels = {f"level_{m}": [list(lab) for lab in level] for m, level in enumerate(value.labels)}
    return SimplicialSetModel(
        truncation=value.truncation,
        level_sizes=list(value.level_sizes),
        faces={f"{m},{i}": list(arr) for (m, i), arr in sorted(value.faces.items())},
        degeneracies={f"{m},{i}": list(arr) for (m, i), arr in sorted(value.degeneracies.items())},
        labels=labels,
    )


@to_model.register
def _(value: BarComplex) -> SimplicialSetModel:
    return to_model(value.underlying)


@to_model.register
def _(value: DiscreteHomotopyAction) -> HomotopyActionModel:
    return HomotopyActionModel(
        source=to_model(value.source),
        target=to_model(value.target),
        level_maps=[list(lm) for lm in value.pi.level_maps],
    )


@to_model.register
def _(value: RigidAction) -> RigidActionModel:
    return RigidActionModel(group=to_model(value.group), action=to_model(value.action))


@to_model.register
def _(value: TruncatedSimplicialGroup) -> GammaModel:
    if value.crossed_module is None:
        raise InputError("only simplicial groups built from a crossed module have a file format")
    return GammaModel(crossed_module=to_model(value.crossed_module), simplicial_set=to_model(value.underlying))


def gamma_to_model(gamma: TruncatedSimplicialGroup, report: Optional[Report] = None) -> GammaModel:
    model = to_model(gamma)
    if report is not None:
        model.report = report.to_dict()
    return model


def group_from_model(model: GroupModel) -> FiniteGroup:
    return validate_group(model.table, model.identity, name=model.name, labels=model.labels or ())


def hom_from_model(model: HomModel, base_dir: Optional[Path] = None) -> GroupHom:
    return validate_hom(resolve_group(model.source, base_dir), resolve_group(model.target, base_dir), model.map)


def crossed_module_from_model(
    model: CrossedModuleModel, base_dir: Optional[Path] = None, validate: bool = True
) -> CrossedModule:
    """
    Raises:
        InvalidAction: the action table is not an action by automorphisms
        InvalidCrossedModule: validate is set and CM1 or CM2 fails
    """
    boundary = hom_from_model(model.boundary, base_dir)
    action: GroupActionOnGroup = validate_action(boundary.target, boundary.source, model.action)  # type: ignore[arg-type]
    if validate:
        return make_crossed_module(boundary, action)
    return CrossedModule(boundary, action)


def gset_from_model(model: RightGSetModel, base_dir: Optional[Path] = None) -> RightGSet:
    return validate_right_action(resolve_group(model.group, base_dir), model.carrier_size, model.action)


def finset_map_from_model(model: FinSetMapModel) -> FinSetMap:
    return FinSetMap(model.domain, model.codomain, tuple(model.map))


def _pair(key: str) -> Tuple[int, int]:
    m, i = key.split(",")
    return int(m), int(i)


def simplicial_from_model(model: SimplicialSetModel) -> TruncatedSimplicialSet:
    labels: Optional[List[List[List[int]]]] = None
    if model.labels is not None:
        try:
            labels = [model.labels[f"level_{m}"] for m in range(model.truncation + 1)]
        except KeyError as exc:
            raise InputError(f"labels block is missing {exc.args[0]}") from exc
    return make_simplicial_set(
        model.level_sizes,
        {_pair(k): v for k, v in model.faces.items()},
        {_pair(k): v for k, v in model.degeneracies.items()},
        labels,
    )


def action_from_model(model: HomotopyActionModel) -> DiscreteHomotopyAction:
    source = simplicial_from_model(model.source)
    target = simplicial_from_model(model.target)
    if len(model.level_maps) != len(source.level_sizes):
        raise InputError(f"{len(model.level_maps)} level maps for {len(source.level_sizes)} levels")
    return DiscreteHomotopyAction(SimplicialMap(source, target, tuple(tuple(lm) for lm in model.level_maps)))


def rigid_from_model(model: RigidActionModel) -> RigidAction:
    group = group_from_model(model.group)
    return RigidAction(group, gset_from_model(model.action))


def gamma_from_model(model: GammaModel, base_dir: Optional[Path] = None) -> TruncatedSimplicialGroup:
    """
    Rebuild Gamma from its crossed module and check it against the stored simplicial set.

    Raises:
        InvalidCrossedModule: the crossed module fails CM1 or CM2
        InputError: the stored simplicial set is not the one the crossed module builds
    """
    cm = crossed_module_from_model(model.crossed_module, base_dir)
    gamma = gamma_from_cm(cm, model.simplicial_set.truncation)
    if to_model(gamma.underlying) != model.simplicial_set:
        raise InputError("the stored simplicial set differs from the one built from the crossed module")
    return gamma


_READERS: Dict[Type[BaseModel], Any] = {
    GroupModel: lambda m, base: group_from_model(m),
    HomModel: hom_from_model,
    CrossedModuleModel: crossed_module_from_model,
    RightGSetModel: gset_from_model,
    FinSetMapModel: lambda m, base: finset_map_from_model(m),
    SimplicialSetModel: lambda m, base: simplicial_from_model(m),
    HomotopyActionModel: lambda m, base: action_from_model(m),
    RigidActionModel: lambda m, base: rigid_from_model(m),
    GammaModel: gamma_from_model,
}


def from_model(model: BaseModel, base_dir: Optional[Path] = None) -> Any:
    reader = _READERS.get(type(model))
    if reader is None:
        raise InputError(f"cannot build a value from {type(model).__name__}")
    return reader(model, base_dir)


# Text and files
# --------------

def dumps(value: Any) -> str:
    model = value if isinstance(value, BaseModel) else to_model(value)
    return model.model_dump_json(indent=2, exclude_none=True)


def loads(text: str, model_cls: Type[M], base_dir: Optional[Path] = None) -> Any:
    """
    Parse JSON text as `model_cls` and build the domain value.

    Raises:
        pydantic.ValidationError: malformed JSON or a shape error
        InputError: the content fails an algebraic check
    """
    return from_model(model_cls.model_validate_json(text), base_dir)


def load_model(path: PathLike, model_cls: Type[M]) -> M:
    text = Path(path).read_text(encoding="utf-8")
    return model_cls.model_validate_json(text)


def load(path: PathLike, model_cls: Type[M]) -> Any:
    """Read a file; group references inside it resolve relative to its directory."""
    path = Path(path)
    logger.debug("loading %s as %s", path, model_cls.__name__)
    return from_model(load_model(path, model_cls), path.parent)


def write(path: PathLike, value: Any) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(value) + "\n", encoding="utf-8")
    logger.debug("wrote %s", path)
    return path
