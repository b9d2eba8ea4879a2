# Copyright 2023 Julian Knutsen
#
# Permission is hereby granted, free of charge, to any person obtaining a copy of
# this software and associated documentation files (the “Software”), to deal in
# the Software without restriction, including without limitation the rights to use,
# copy, modify, merge, publish, distribute, sublicense, and/or sell copies of the
# Software, and to permit persons to whom the Software is furnished to do so,
# subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED “AS IS”, WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
# OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
# HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
# WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
# FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
# OTHER DEALINGS IN THE SOFTWARE.

import configparser
import dataclasses
import logging
import os
import pathlib
import typing

from idverify import exceptions

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = pathlib.Path(__file__).with_name("config.ini")
PROFILES = ("full", "fast")


@dataclasses.dataclass(frozen=True)
class ProfileConfig:
    name: str
    tol_scale: float
    budget_scale: float

    def __post_init__(self):
        if self.tol_scale <= 0:
            raise exceptions.ValidationError("tol_scale must be positive")
        if not 0 < self.budget_scale <= 1:
            raise exceptions.ValidationError("budget_scale must be in (0, 1]")

    @classmethod
    def from_config(cls, cfg: configparser.ConfigParser, name: str):
        section = f"Profile.{name}"
        fast = name == "fast"
        return cls(
            name=name,
            tol_scale=cfg.getfloat(section, "tol_scale", fallback=100.0 if fast else 1.0),
            budget_scale=cfg.getfloat(
                section, "budget_scale", fallback=0.1 if fast else 1.0
            ),
        )


@dataclasses.dataclass(frozen=True)
class QuadConfig:
    target_abs_tol: float
    max_level: int

    @classmethod
    def from_config(cls, cfg: configparser.ConfigParser):
        return cls(
            target_abs_tol=cfg.getfloat("Quad", "target_abs_tol", fallback=1e-10),
            max_level=cfg.getint("Quad", "max_level", fallback=12),
        )


@dataclasses.dataclass(frozen=True)
class EngineConfig:
    engine_version: str
    default_profile: str
    seed: int
    jobs: int
    quad: QuadConfig
    alternating_terms: int
    minimize_starts: int
    profiles: dict[str, ProfileConfig]

    @classmethod
    def from_config(cls, cfg: configparser.ConfigParser):
        default_profile = os.environ.get(
            "IDVERIFY_PROFILE",
            cfg.get("General", "default_profile", fallback="full"),
        )
        if default_profile not in PROFILES:
            raise exceptions.ValidationError(
                f"unknown profile {default_profile!r}, expected one of {PROFILES}"
            )

        return cls(
            engine_version=cfg.get("General", "engine_version", fallback="0.1.0"),
            default_profile=default_profile,
            seed=cfg.getint("General", "seed", fallback=20240601),
            jobs=cfg.getint("General", "jobs", fallback=1),
            quad=QuadConfig.from_config(cfg),
            alternating_terms=cfg.getint("Series", "alternating_terms", fallback=40),
            minimize_starts=cfg.getint("Minimize", "starts", fallback=64),
            profiles={name: ProfileConfig.from_config(cfg, name) for name in PROFILES},
        )

    def profile(self, name: typing.Optional[str] = None) -> ProfileConfig:
        name = name or self.default_profile
        if name not in self.profiles:
            raise exceptions.ValidationError(
                f"unknown profile {name!r}, expected one of {PROFILES}"
            )
        return self.profiles[name]


def load_config(path: typing.Optional[str] = None) -> EngineConfig:
    path = path or os.environ.get("IDVERIFY_CONFIG") or str(DEFAULT_CONFIG_PATH)
    cfg = configparser.ConfigParser()
    if not cfg.read(path):
        logger.warning("Config file %s not found, using built-in defaults", path)

    return EngineConfig.from_config(cfg)
