#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Pydantic models of the JSON files homnorm reads and writes.

The models only check the shape of a file (types, required keys, matching
lengths). Algebraic checks happen when serialization turns a model into a
domain value.
"""

from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class _FileModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class GroupModel(_FileModel):
    """{"name": str, "order": n, "identity": i, "table": [[...]]}"""

    name: str = ""
    order: int = Field(ge=1)
    identity: int = Field(ge=0)
    table: List[List[int]]
    labels: Optional[List[str]] = None

    @model_validator(mode="after")
    def _order_matches(self) -> "GroupModel":
        if len(self.table) != self.order:
            raise ValueError(f"table has {len(self.table)} rows, order is {self.order}")
        return self


# a catalog name or a path to a group file, or the group itself
GroupRef = Union[GroupModel, str]


class HomModel(_FileModel):
    """{"source": <group or path>, "target": <group or path>, "map": [...]}"""

    source: GroupRef
    target: GroupRef
    map: List[int]


class CrossedModuleModel(_FileModel):
    """{"boundary": <hom>, "action": [[...]]} with action[g][n] the index of g.n"""

    boundary: HomModel
    action: List[List[int]]


class RightGSetModel(_FileModel):
    """A right G-set: action[x][g] is x.g."""

    group: GroupRef
    carrier_size: int = Field(ge=1)
    action: List[List[int]]


class FinSetMapModel(_FileModel):
    domain: int = Field(ge=0)
    codomain: int = Field(ge=0)
    map: List[int]


class SimplicialSetModel(_FileModel):
    """
    {"truncation": k, "level_sizes": [...], "faces": {"m,i": [...]},
    "degeneracies": {"m,i": [...]}, "labels": {"level_m": [[...], ...]}}
    """

    truncation: int = Field(ge=0)
    level_sizes: List[int]
    faces: Dict[str, List[int]]
    degeneracies: Dict[str, List[int]]
    labels: Optional[Dict[str, List[List[int]]]] = None

    @field_validator("faces", "degeneracies")
    @classmethod
    def _keys_are_pairs(cls, value: Dict[str, List[int]]) -> Dict[str, List[int]]:
        for key in value:
            parts = key.split(",")
            if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
                raise ValueError(f"structure map key '{key}' is not of the form 'm,i'")
        return value

    @model_validator(mode="after")
    def _truncation_matches(self) -> "SimplicialSetModel":
        if len(self.level_sizes) != self.truncation + 1:
            raise ValueError(
                f"{len(self.level_sizes)} level sizes for truncation {self.truncation}"
            )
        return self


class HomotopyActionModel(_FileModel):
    """pi: source -> target as two simplicial sets and a level-map block."""

    source: SimplicialSetModel
    target: SimplicialSetModel
    level_maps: List[List[int]]


class RigidActionModel(_FileModel):
    group: GroupModel
    action: RightGSetModel


class GammaModel(_FileModel):
    """A serialized Gamma: the crossed module it is built from and its underlying simplicial set."""

    crossed_module: CrossedModuleModel
    simplicial_set: SimplicialSetModel
    report: Optional[Dict[str, Any]] = None
