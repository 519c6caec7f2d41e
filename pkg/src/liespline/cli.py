"""Scenario-driven command line front end.

A scenario is a JSON file naming a group, a mode, and the data the mode
needs: explicit knots, an exact coordinate-polynomial reference, or a
rod model whose reference solution supplies poses, strains and jets.
``run`` samples the resulting curve into a CSV table and writes a JSON
summary (error statistics against the reference where one exists, knot
continuity residuals, slope fits for sweeps).  ``sweep`` reruns a
scenario over a parameter list; ``list-fixtures`` catalogs the bundled
scenarios.

Exit codes: 0 success, 2 scenario validation error, 3 numerical failure
(branch-limit or domain errors while building or sampling).
All floating point output is printed with 17 significant digits and the
execution order is fixed, so identical inputs give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, Optional

import numpy as np

from .bezier import ControlNet, decasteljau_eval
from .errors import LieSplineError, ScenarioError
from .globalspline import (build_global_c1_order3_vel, build_global_c2_order3,
                           build_global_c2_order4_vel, build_global_c3_order4)
from .liealg import LieGroup, group_from_tag
from .poe import (KnotData, build_poe_c1_order3_vel, build_poe_c2_order3,
                  build_poe_c2_order4_vel, build_poe_c3_order4)
from .rod import (RodModel, RodTrajectory, integrate_reference,
                  pose_error_from_poses, sample_equilibrium_strains,
                  solve_tip_load, strain_jet)
from .twopoint import (TwoPointProblem, boundary_value_interp,
                       initial_value_interp, xi_jet_to_v_jet)

_SPLINE_BUILDERS = {
    "poe-3": (build_poe_c2_order3, "jet", 3),
    "poe-4": (build_poe_c3_order4, "jet", 4),
    "poe-3-vel": (build_poe_c1_order3_vel, "vel", 3),
    "poe-4-vel": (build_poe_c2_order4_vel, "vel", 4),
    "global-3": (build_global_c2_order3, "jet", 3),
    "global-4": (build_global_c3_order4, "jet", 4),
    "global-3-vel": (build_global_c1_order3_vel, "vel", 3),
    "global-4-vel": (build_global_c2_order4_vel, "vel", 4),
}
_MODES = (list(_SPLINE_BUILDERS) +
          ["two-point-iv", "two-point-bv", "bezier", "rod-reference"])
# Continuity classes advertised by the spline builders, as derivative
# depth at interior knots (1 = velocity, 2 = +acceleration, 3 = +jerk).
_CLASS_DEPTH = {"poe-3": 2, "poe-4": 3, "poe-3-vel": 1, "poe-4-vel": 2,
                "global-3": 2, "global-4": 3, "global-3-vel": 1,
                "global-4-vel": 2}
_DERIV_NAMES = ("velocity", "acceleration", "jerk")

OUTDIR_ENV = "LIESPLINE_OUTDIR"


def _fmt(x: float) -> str:
    return "%.17g" % float(x)


def _require(cfg: dict, field: str, kind, where: str = ""):
    path = f"{where}.{field}" if where else field
    if field not in cfg:
        raise ScenarioError(f"missing field '{path}'")
    value = cfg[field]
    if kind is float and isinstance(value, int):
        value = float(value)
    if not isinstance(value, kind):
        raise ScenarioError(f"field '{path}' has wrong type")
    return value


def _vector(raw, dim: int, path: str) -> np.ndarray:
    try:
        arr = np.asarray(raw, dtype=float)
    except (TypeError, ValueError):
        raise ScenarioError(f"field '{path}' must be numeric") from None
    if arr.shape != (dim,):
        raise ScenarioError(f"field '{path}' must be a length-{dim} vector")
    return arr


def _parse_pose(group: LieGroup, entry, path: str) -> np.ndarray:
    if not isinstance(entry, dict):
        raise ScenarioError(f"field '{path}' must be an object")
    if "matrix" in entry:
        try:
            mat = np.asarray(entry["matrix"], dtype=float)
        except (TypeError, ValueError):
            raise ScenarioError(
                f"field '{path}.matrix' must be numeric") from None
        rot_only = group.tag == "so3"
        want = (3, 3) if rot_only else (4, 4)
        if mat.shape == (3, 4) and not rot_only:
            mat = np.vstack([mat, [0.0, 0.0, 0.0, 1.0]])
        if mat.shape != want:
            raise ScenarioError(f"field '{path}.matrix' must be {want}")
        drift = group.orthonormality_drift(mat)
        if drift > 1e-3:
            raise ScenarioError(
                f"field '{path}.matrix' is not a rotation "
                f"(orthonormality drift {drift:.2e})")
        return group.project(mat)
    if "expcoords" in entry:
        xi = _vector(entry["expcoords"], group.alg_dim, path + ".expcoords")
        return group.exp(xi)
    raise ScenarioError(f"field '{path}' needs 'matrix' or 'expcoords'")


class _PolyReference:
    """Exact curve h(t) = exp(xi(t)) with polynomial coordinates."""

    def __init__(self, group: LieGroup, cfg: dict):
        coeffs = _require(cfg, "coeffs", list, "reference")
        # coeffs[j] multiplies t^(j+1); the constant term is zero so the
        # curve starts at the identity.
        self.group = group
        self.coeffs = [_vector(c, group.alg_dim, f"reference.coeffs[{j}]")
                       for j, c in enumerate(coeffs)]

    def xi_jet(self, t: float, s: int = 3) -> List[np.ndarray]:
        dim = self.group.alg_dim
        jet = [np.zeros(dim) for _ in range(s + 1)]
        for j, c in enumerate(self.coeffs):
            p = j + 1
            fac = 1.0
            for m in range(s + 1):
                if m > p:
                    break
                jet[m] = jet[m] + fac * t ** (p - m) * c
                fac *= p - m
        return jet

    def pose(self, t: float) -> np.ndarray:
        return self.group.exp(self.xi_jet(t, 0)[0])

    def velocity(self, t: float) -> np.ndarray:
        xi, xid = self.xi_jet(t, 1)
        return xi_jet_to_v_jet(self.group, xi, [xid])[0]

    def v_jet0(self, s: int) -> List[np.ndarray]:
        jet = self.xi_jet(0.0, s + 1)
        return xi_jet_to_v_jet(self.group, jet[0], jet[1:])


class _RodReference:
    """Reference trajectory of an end-loaded rod on SE(3)."""

    def __init__(self, group: LieGroup, cfg: dict):
        if group.tag != "se3":
            raise ScenarioError("field 'rod' requires group 'se3'")
        self.group = group
        length = _require(cfg, "length", float, "rod")
        section = _require(cfg, "section", list, "rod")
        if len(section) != 2:
            raise ScenarioError("field 'rod.section' must be [dim_y, dim_z]")
        self.model = RodModel.from_section(
            length, float(section[0]), float(section[1]),
            young=_require(cfg, "young", float, "rod"),
            shear=_require(cfg, "shear", float, "rod"))
        self.steps = int(cfg.get("steps", 2000))
        given = [k for k in ("base_wrench", "tip_wrench", "v0") if k in cfg]
        if len(given) != 1:
            raise ScenarioError(
                "field 'rod' needs exactly one of base_wrench, tip_wrench, v0")
        if given[0] == "base_wrench":
            w = _vector(cfg["base_wrench"], 6, "rod.base_wrench")
            v0 = self.model.ref_strain - w / self.model.stiffness
        elif given[0] == "tip_wrench":
            w = _vector(cfg["tip_wrench"], 6, "rod.tip_wrench")
            v0 = solve_tip_load(self.model, w, steps=self.steps)
        else:
            v0 = _vector(cfg["v0"], 6, "rod.v0")
        self.trajectory: RodTrajectory = integrate_reference(
            self.model, v0, steps=self.steps)

    def index(self, t: float, path: str) -> int:
        try:
            return self.trajectory.index_of(t)
        except ValueError:
            raise ScenarioError(
                f"field '{path}': t={_fmt(t)} is not on the reference grid "
                f"of {self.steps} steps") from None

    def pose(self, t: float) -> np.ndarray:
        return self.trajectory.poses[self.index(t, "output.samples")]

    def velocity(self, t: float) -> np.ndarray:
        return self.trajectory.strains[self.index(t, "knots.times")]

    def v_jet0(self, s: int) -> List[np.ndarray]:
        return strain_jet(self.model, self.trajectory.strains[0], 0.0, s)


@dataclass
class _Table:
    header: List[str]
    rows: List[List[float]]

    def write(self, path: str):
        with open(path, "w") as fh:
            fh.write(",".join(self.header) + "\n")
            for row in self.rows:
                fh.write(",".join(_fmt(x) for x in row) + "\n")


def _pose_columns(group: LieGroup, tag: str) -> List[str]:
    cols = [f"{tag}R{i}{j}" for i in (1, 2, 3) for j in (1, 2, 3)]
    if group.tag != "so3":
        cols += [f"{tag}r{ax}" for ax in "xyz"]
    return cols


def _flatten_pose(group: LieGroup, g: np.ndarray) -> List[float]:
    out = list(g[:3, :3].reshape(-1))
    if group.tag != "so3":
        out += list(g[:3, 3])
    return out


def _curve_table(group, times, poses, vels, eps, base_pose):
    """Rows (t, pose, xi, v, eps_r, eps_p) with unwrapped xi."""
    dim = group.alg_dim
    header = (["t"] + _pose_columns(group, "") +
              [f"xi{i}" for i in range(1, dim + 1)] +
              [f"v{i}" for i in range(1, dim + 1)] + ["eps_r", "eps_p"])
    rows = []
    xi_prev = np.zeros(dim)
    max_jump = 0.0
    base_inv = group.inverse(base_pose)
    for j, t in enumerate(times):
        xi = group.log_near(group.compose(base_inv, poses[j]), xi_prev)
        if j > 0:
            max_jump = max(max_jump, float(np.linalg.norm(xi - xi_prev)))
        xi_prev = xi
        v = vels[j] if vels is not None else [np.nan] * dim
        e = eps[j] if eps is not None else (np.nan, np.nan)
        rows.append([t] + _flatten_pose(group, poses[j]) + list(xi) +
                    list(v) + [e[0], e[1]])
    if max_jump > 0.5 * np.pi:
        raise LieSplineError(
            f"coordinate curve jumps by {max_jump:.3f} between samples; "
            "sampling too coarse to keep the chart continuous")
    return _Table(header, rows), max_jump


def _eps_stats(eps) -> Dict[str, Optional[float]]:
    if eps is None:
        return {"max_eps_r": None, "mean_eps_r": None,
                "max_eps_p": None, "mean_eps_p": None}
    er = [e[0] for e in eps]
    ep = [e[1] for e in eps]
    return {"max_eps_r": max(er), "mean_eps_r": float(np.mean(er)),
            "max_eps_p": max(ep), "mean_eps_p": float(np.mean(ep))}


class Scenario:
    """Validated scenario file plus derived data providers."""

    def __init__(self, cfg: dict):
        if not isinstance(cfg, dict):
            raise ScenarioError("scenario must be a JSON object")
        self.cfg = cfg
        tag = _require(cfg, "group", str)
        try:
            self.group = group_from_tag(tag)
        except ValueError:
            raise ScenarioError(f"field 'group': unknown tag '{tag}'") from None
        self.mode = _require(cfg, "mode", str)
        if self.mode not in _MODES:
            raise ScenarioError(f"field 'mode': unknown mode '{self.mode}'")
        self.title = cfg.get("title", "")
        out = cfg.get("output", {})
        if not isinstance(out, dict):
            raise ScenarioError("field 'output' must be an object")
        self.samples = int(out.get("samples", 201))
        if self.samples < 2:
            raise ScenarioError("field 'output.samples' must be >= 2")
        self.csv_name = out.get("csv", "curve.csv")
        self.summary_name = out.get("summary", "summary.json")
        self.reference = None
        if "rod" in cfg:
            self.reference = _RodReference(
                self.group, _require(cfg, "rod", dict))
        elif "reference" in cfg:
            self.reference = _PolyReference(
                self.group, _require(cfg, "reference", dict))
        self.sweep = cfg.get("sweep")

    # -- knot assembly -------------------------------------------------
    def knot_times(self) -> np.ndarray:
        cfg = self.cfg
        if "knots" in cfg:
            times = _vector(_require(cfg["knots"], "times", list, "knots"),
                            len(cfg["knots"]["times"]), "knots.times")
        elif "segments" in cfg:
            n = _require(cfg, "segments", int)
            if n < 1:
                raise ScenarioError("field 'segments' must be >= 1")
            times = np.linspace(0.0, 1.0, n + 1)
        elif "knot_times" in cfg:
            raw = _require(cfg, "knot_times", list)
            times = _vector(raw, len(raw), "knot_times")
        else:
            raise ScenarioError(
                "scenario needs 'knots', 'knot_times' or 'segments'")
        if len(times) < 2:
            raise ScenarioError("field 'knots.times' needs at least 2 knots")
        for i in range(1, len(times)):
            if times[i] <= times[i - 1]:
                raise ScenarioError(
                    f"field 'knots.times[{i}]' is not strictly increasing")
        return times

    def knot_data(self, kind: str, order: int) -> KnotData:
        cfg = self.cfg
        times = self.knot_times()
        g = self.group
        if "knots" in cfg:
            kn = cfg["knots"]
            raw_poses = _require(kn, "poses", list, "knots")
            if len(raw_poses) != len(times):
                raise ScenarioError(
                    "field 'knots.poses' must match 'knots.times' in length")
            poses = [_parse_pose(g, p, f"knots.poses[{i}]")
                     for i, p in enumerate(raw_poses)]
            vels = None
            if "velocities" in kn:
                vels = [_vector(v, g.alg_dim, f"knots.velocities[{i}]")
                        for i, v in enumerate(kn["velocities"])]
                if len(vels) != len(times):
                    raise ScenarioError("field 'knots.velocities' must "
                                        "match 'knots.times' in length")
            jets = cfg.get("jets", {})
            seeds = {k: _vector(jets[k], g.alg_dim, f"jets.{k}")
                     for k in ("v0", "v0dot", "v0ddot") if k in jets}
        elif self.reference is not None:
            ref = self.reference
            if isinstance(ref, _RodReference):
                idx = [ref.index(t, "knot_times") for t in times]
                poses = [ref.trajectory.poses[j] for j in idx]
                vels = sample_equilibrium_strains(
                    ref.model, ref.trajectory.strains[0], poses)
            else:
                poses = [ref.pose(t) for t in times]
                vels = [ref.velocity(t) for t in times]
            jet = ref.v_jet0(2)
            seeds = {"v0": jet[0], "v0dot": jet[1], "v0ddot": jet[2]}
        else:
            raise ScenarioError(
                "scenario needs 'knots', or a 'rod'/'reference' block")
        if kind == "vel":
            if vels is None:
                raise ScenarioError(
                    f"mode '{self.mode}' needs 'knots.velocities'")
            if order >= 4 and "v0dot" not in seeds:
                raise ScenarioError(f"mode '{self.mode}' needs 'jets.v0dot'")
            return KnotData(g, times, poses, velocities=vels,
                            v0dot=seeds.get("v0dot") if order >= 4 else None)
        missing = [k for k in ("v0", "v0dot", "v0ddot")[:order - 1]
                   if k not in seeds]
        if missing:
            raise ScenarioError(f"mode '{self.mode}' needs 'jets.{missing[0]}'")
        return KnotData(g, times, poses,
                        v0=seeds["v0"], v0dot=seeds.get("v0dot"),
                        v0ddot=seeds.get("v0ddot"))

    def eps_against_reference(self, times, poses):
        ref = self.reference
        if ref is None:
            return None
        return [pose_error_from_poses(self.group, ref.pose(t), poses[j])
                for j, t in enumerate(times)]


# -- mode runners ------------------------------------------------------

def _run_spline(sc: Scenario) -> dict:
    builder, kind, order = _SPLINE_BUILDERS[sc.mode]
    data = sc.knot_data(kind, order)
    if sc.mode.startswith("global") and "base" in sc.cfg:
        spline = builder(data, base=_parse_pose(sc.group, sc.cfg["base"],
                                                "base"))
    else:
        spline = builder(data)
    t0, t1 = spline.domain
    times = np.linspace(t0, t1, sc.samples)
    poses, vels = [], []
    for t in times:
        pose, v, _ = spline.eval(t)
        poses.append(pose)
        vels.append(v)
    eps = sc.eps_against_reference(times, poses)
    base_pose = spline.base if hasattr(spline, "base") else poses[0]
    table, max_jump = _curve_table(sc.group, times, poses, vels, eps,
                                   base_pose)
    depth = _CLASS_DEPTH[sc.mode]
    cont = {"pose": 0.0}
    for name in _DERIV_NAMES[:depth]:
        cont[name] = 0.0
    for t in spline.times[1:-1]:
        pose_l, jet_l = spline.body_jet(t, s=depth, left=True)
        pose_r, jet_r = spline.body_jet(t, s=depth, left=False)
        rel = np.linalg.norm(
            sc.group.log(sc.group.compose(sc.group.inverse(pose_l), pose_r)))
        cont["pose"] = max(cont["pose"], float(rel))
        for m, name in enumerate(_DERIV_NAMES[:depth]):
            cont[name] = max(cont[name],
                             float(np.abs(jet_l[m] - jet_r[m]).max()))
    summary = {"knot_continuity": cont, "max_xi_jump": max_jump,
               "knots": len(spline.times)}
    summary.update(_eps_stats(eps))
    return {"table": table, "summary": summary}


def _two_point_problem(sc: Scenario, order: int, t0: float, t1: float):
    if order not in (3, 4, 5):
        raise ScenarioError("field 'order' must be 3, 4 or 5")
    g = sc.group
    T = t1 - t0
    n_jet = order - 1 if sc.mode == "two-point-iv" else order - 2
    if isinstance(sc.reference, _RodReference):
        ref = sc.reference
        j0 = ref.index(t0, "segment")
        j1 = ref.index(t1, "segment")
        g0 = ref.trajectory.poses[j0]
        g1 = ref.trajectory.poses[j1]
        jet = strain_jet(ref.model, ref.trajectory.strains[j0], t0, n_jet - 1)
        jet0 = [jet[m] * T ** (m + 1) for m in range(n_jet)]
        v1 = (T * ref.trajectory.strains[j1]
              if sc.mode == "two-point-bv" else None)
    else:
        kn = _require(sc.cfg, "knots", dict)
        raw_poses = _require(kn, "poses", list, "knots")
        if len(raw_poses) != 2:
            raise ScenarioError("two-point modes need exactly 2 knot poses")
        g0 = _parse_pose(g, raw_poses[0], "knots.poses[0]")
        g1 = _parse_pose(g, raw_poses[1], "knots.poses[1]")
        jets = sc.cfg.get("jets", {})
        names = ("v0", "v0dot", "v0ddot")[:n_jet]
        jet0 = []
        for m, name in enumerate(names):
            if name not in jets:
                raise ScenarioError(f"mode '{sc.mode}' needs 'jets.{name}'")
            jet0.append(_vector(jets[name], g.alg_dim, f"jets.{name}")
                        * T ** (m + 1))
        v1 = None
        if sc.mode == "two-point-bv":
            if "v1" not in sc.cfg:
                raise ScenarioError("mode 'two-point-bv' needs 'v1'")
            v1 = T * _vector(sc.cfg["v1"], g.alg_dim, "v1")
    return TwoPointProblem(g, g0, g1, jet0=jet0, v1=v1, order=order)


def _run_two_point(sc: Scenario) -> dict:
    order = int(sc.cfg.get("order", 3))
    seg = sc.cfg.get("segment", [0.0, 1.0])
    if (not isinstance(seg, list) or len(seg) != 2
            or not float(seg[0]) < float(seg[1])):
        raise ScenarioError("field 'segment' must be [t0, t1] with t0 < t1")
    t0, t1 = float(seg[0]), float(seg[1])
    problem = _two_point_problem(sc, order, t0, t1)
    poly = (initial_value_interp(problem) if sc.mode == "two-point-iv"
            else boundary_value_interp(problem))
    g = sc.group
    T = t1 - t0
    times = np.linspace(t0, t1, sc.samples)
    poses, vels = [], []
    for j, t in enumerate(times):
        tau = (t - t0) / T
        xi, xid = poly.jet(tau, 1)
        poses.append(g.compose(problem.g0, g.exp(xi)))
        vels.append(xi_jet_to_v_jet(g, xi, [xid])[0] / T)
    eps = sc.eps_against_reference(times, poses)
    table, max_jump = _curve_table(g, times, poses, vels, eps, problem.g0)
    summary = {"order": order, "segment": [t0, t1], "max_xi_jump": max_jump}
    summary.update(_eps_stats(eps))
    return {"table": table, "summary": summary}


def _run_bezier(sc: Scenario) -> dict:
    kn = _require(sc.cfg, "knots", dict)
    raw_poses = _require(kn, "poses", list, "knots")
    pts = [_parse_pose(sc.group, p, f"knots.poses[{i}]")
           for i, p in enumerate(raw_poses)]
    net = ControlNet(sc.group, pts)
    times = np.linspace(0.0, 1.0, sc.samples)
    poses = [decasteljau_eval(net, t) for t in times]
    eps = sc.eps_against_reference(times, poses)
    table, max_jump = _curve_table(sc.group, times, poses, None, eps, pts[0])
    summary = {"control_points": len(pts), "max_xi_jump": max_jump}
    summary.update(_eps_stats(eps))
    return {"table": table, "summary": summary}


def _run_rod_reference(sc: Scenario) -> dict:
    if not isinstance(sc.reference, _RodReference):
        raise ScenarioError("mode 'rod-reference' needs a 'rod' block")
    ref = sc.reference
    times = np.linspace(0.0, 1.0, sc.samples)
    idx = [ref.index(t, "output.samples") for t in times]
    poses = [ref.trajectory.poses[j] for j in idx]
    vels = [ref.trajectory.strains[j] for j in idx]
    eps = [(0.0, 0.0)] * len(times)
    table, max_jump = _curve_table(sc.group, times, poses, vels, eps,
                                   poses[0])
    summary = {"steps": ref.steps, "max_xi_jump": max_jump,
               "v0": list(ref.trajectory.strains[0]),
               "v1": list(ref.trajectory.strains[-1])}
    summary.update(_eps_stats(eps))
    return {"table": table, "summary": summary}


# -- sweeps ------------------------------------------------------------

def _sweep_segment_length(sc: Scenario, values: List[float]) -> dict:
    if not isinstance(sc.reference, _RodReference):
        raise ScenarioError("sweep parameter 'T' needs a 'rod' block")
    orders = sc.cfg.get("orders", [3, 4])
    header = ["T"]
    for order in orders:
        header += [f"eps_r_k{order}", f"eps_p_k{order}"]
    rows = []
    for T in values:
        if not 0.0 < T <= 1.0:
            raise ScenarioError("field 'sweep.values': T must be in (0, 1]")
        row = [T]
        jm = sc.reference.index(T / 2.0, "sweep.values")
        for order in orders:
            problem = _two_point_problem(sc, int(order), 0.0, T)
            poly = (initial_value_interp(problem)
                    if sc.mode == "two-point-iv"
                    else boundary_value_interp(problem))
            pose = sc.group.compose(problem.g0,
                                    sc.group.exp(poly.value(0.5)))
            row += list(pose_error_from_poses(
                sc.group, sc.reference.trajectory.poses[jm], pose))
        rows.append(row)
    logv = np.log(values)
    slopes = {}
    for c, name in enumerate(header[1:], start=1):
        col = np.log([row[c] for row in rows])
        slopes[name] = float(np.polyfit(logv, col, 1)[0])
    return {"table": _Table(header, rows),
            "summary": {"parameter": "T", "values": list(values),
                        "slopes": slopes}}


def _sweep_steps(sc: Scenario, values: List[float]) -> dict:
    if not isinstance(sc.reference, _RodReference):
        raise ScenarioError("sweep parameter 'steps' needs a 'rod' block")
    counts = [int(v) for v in values]
    if any(c < 1 for c in counts):
        raise ScenarioError("field 'sweep.values': steps must be >= 1")
    g = sc.group
    v0 = sc.reference.trajectory.strains[0]
    ends = [integrate_reference(sc.reference.model, v0, steps=c).poses[-1]
            for c in counts]
    header = ["steps", "end_shift"]
    rows = [[counts[0], np.nan]]
    dists = []
    for c, (a, b) in zip(counts[1:], zip(ends, ends[1:])):
        d = float(np.linalg.norm(g.log(g.compose(g.inverse(a), b))))
        dists.append(d)
        rows.append([c, d])
    ratios = [dists[i] / dists[i + 1] for i in range(len(dists) - 1)]
    return {"table": _Table(header, rows),
            "summary": {"parameter": "steps", "values": counts,
                        "refinement_ratios": ratios}}


def run_scenario(cfg: dict, out_dir: str,
                 samples: Optional[int] = None) -> dict:
    """Execute one scenario; returns the summary dict."""
    sc = Scenario(cfg)
    if samples is not None:
        sc.samples = samples
    if sc.sweep is not None:
        param = _require(sc.sweep, "parameter", str, "sweep")
        values = _require(sc.sweep, "values", list, "sweep")
        if not values:
            raise ScenarioError("field 'sweep.values' must be non-empty")
        if param == "T":
            result = _sweep_segment_length(sc, [float(v) for v in values])
        elif param == "steps":
            result = _sweep_steps(sc, values)
        else:
            raise ScenarioError(
                f"field 'sweep.parameter': unsupported '{param}'")
    elif sc.mode in _SPLINE_BUILDERS:
        result = _run_spline(sc)
    elif sc.mode in ("two-point-iv", "two-point-bv"):
        result = _run_two_point(sc)
    elif sc.mode == "bezier":
        result = _run_bezier(sc)
    else:
        result = _run_rod_reference(sc)
    os.makedirs(out_dir, exist_ok=True)
    csv_path = os.path.join(out_dir, sc.csv_name)
    result["table"].write(csv_path)
    summary = {"title": sc.title, "group": sc.group.tag, "mode": sc.mode,
               "samples": sc.samples, "csv": sc.csv_name}
    summary.update(result["summary"])
    with open(os.path.join(out_dir, sc.summary_name), "w") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return summary


# -- fixtures and entry point ------------------------------------------

def fixture_names() -> List[str]:
    root = resources.files("liespline") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir()
                  if p.name.endswith(".json"))


def load_fixture(name: str) -> dict:
    path = resources.files("liespline") / "fixtures" / (name + ".json")
    with path.open() as fh:
        return json.load(fh)


def _load_scenario_arg(arg: str) -> dict:
    if os.path.exists(arg):
        try:
            with open(arg) as fh:
                return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ScenarioError(f"invalid JSON in {arg}: {exc}") from None
    name = arg[:-5] if arg.endswith(".json") else arg
    if name in fixture_names():
        return load_fixture(name)
    raise ScenarioError(f"scenario '{arg}' is neither a file nor a fixture")


def _out_dir(args) -> str:
    if args.out:
        return args.out
    return os.environ.get(OUTDIR_ENV, os.getcwd())


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="liespline",
        description="Lie group spline scenarios: build, sample, sweep.")
    sub = parser.add_subparsers(dest="command", required=True)
    p_run = sub.add_parser("run", help="run a scenario file or fixture name")
    p_run.add_argument("scenario")
    p_run.add_argument("--out", help=f"output dir (default ${OUTDIR_ENV} "
                       "or the working directory)")
    p_run.add_argument("--samples", type=int)
    p_run.add_argument("--seed", type=int, help="recorded in the summary; "
                       "scenarios themselves are deterministic")
    sub.add_parser("list-fixtures", help="catalog the bundled scenarios")
    p_sweep = sub.add_parser("sweep", help="rerun a scenario over a "
                             "parameter list")
    p_sweep.add_argument("scenario")
    p_sweep.add_argument("--param", required=True)
    p_sweep.add_argument("--values", required=True, nargs="+", type=float)
    p_sweep.add_argument("--out")
    p_sweep.add_argument("--samples", type=int)
    args = parser.parse_args(argv)

    if args.command == "list-fixtures":
        for name in fixture_names():
            title = load_fixture(name).get("title", "")
            print(f"{name:24s} {title}")
        return 0
    try:
        cfg = _load_scenario_arg(args.scenario)
        if args.command == "sweep":
            cfg = dict(cfg)
            cfg["sweep"] = {"parameter": args.param, "values": args.values}
        summary = run_scenario(cfg, _out_dir(args), args.samples)
        if getattr(args, "seed", None) is not None:
            summary["seed"] = args.seed
        print(json.dumps(summary, indent=2, sort_keys=True))
        return 0
    except ScenarioError as exc:
        print(f"scenario error: {exc}", file=sys.stderr)
        return 2
    except LieSplineError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
