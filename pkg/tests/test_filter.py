"""Test lafair.src.filter."""

import logging

import numpy as np
from pytest import LogCaptureFixture, MonkeyPatch, approx, fixture, mark, param, raises

from lafair.src import curvature, filter as la_filter, functionals, mesh
from lafair.src.filter import (
    BoundaryPolicy,
    FilterConfig,
    UpdateStatus,
    VertexUpdate,
)
from lafair.src.filter.step import _revert_flips


def _fan(n: int = 6, height: float = 0.0) -> mesh.TriangleMesh:
    angle = 2 * np.pi * np.arange(n) / n
    rim = np.column_stack([np.cos(angle), np.sin(angle), np.zeros(n)])
    faces = [(0, 1 + k, 1 + (k + 1) % n) for k in range(n)]
    return mesh.TriangleMesh(np.vstack([[0.0, 0.0, height], rim]), faces)


def _radial_rms(surface: mesh.TriangleMesh) -> float:
    return float(np.sqrt(np.mean((np.linalg.norm(surface.vertices, axis=1) - 1.0) ** 2)))


@fixture(scope="module")
def sphere() -> mesh.TriangleMesh:
    return mesh.icosphere(3)


@fixture(scope="module")
def noisy_sphere(sphere: mesh.TriangleMesh) -> mesh.TriangleMesh:
    return mesh.add_noise(sphere, 0.005, seed=0)


class Test_neighbor_centroid:
    """Test neighbor centroids."""

    @staticmethod
    def test_fan() -> None:
        """Test the center of a symmetric fan."""
        assert np.allclose(la_filter.neighbor_centroid(_fan(height=0.3), 0), 0.0)

    @staticmethod
    def test_corner() -> None:
        """Test a corner with two neighbors."""
        triangle = mesh.TriangleMesh([[1, 1, 0], [0, 0, 0], [2, 0, 0]], [[0, 1, 2]])
        assert np.allclose(la_filter.neighbor_centroid(triangle, 0), [1.0, 0.0, 0.0])

    @staticmethod
    def test_sphere(sphere: mesh.TriangleMesh) -> None:
        """Test centroids of a convex mesh lie inside it."""
        for vertex in range(0, sphere.n_vertices, 37):
            assert np.linalg.norm(la_filter.neighbor_centroid(sphere, vertex)) < 1.0

    @staticmethod
    def test_isolated() -> None:
        """Test isolated vertices have no centroid."""
        lonely = mesh.TriangleMesh([[0, 0, 0], [1, 0, 0], [0, 1, 0], [5, 5, 5]], [[0, 1, 2]])
        with raises(mesh.IsolatedVertexError):
            la_filter.neighbor_centroid(lonely, 3)


class Test_fit_curvature_plane:
    """Test curvature-plane fits."""

    @staticmethod
    def test_constant(sphere: mesh.TriangleMesh) -> None:
        """Test a constant field gives a horizontal plane."""
        field = mesh.ScalarField(np.full(sphere.n_vertices, 0.75))
        plane = la_filter.fit_curvature_plane(sphere, 10, field, 2)
        assert (plane.c0, plane.c1) == approx((0.0, 0.0), abs=1e-12)
        assert plane.c2 == approx(0.75, abs=1e-12)
        assert not plane.degenerate

    @staticmethod
    def test_linear() -> None:
        """Test a linear field in the tangent chart is fitted exactly."""
        grid = mesh.plane(8)
        x, y, _ = grid.vertices.T
        field = mesh.ScalarField(2 * x + 3 * y + 1)
        plane = la_filter.fit_curvature_plane(grid, 40, field, 2)
        assert (plane.c0, plane.c1, plane.c2) == approx((2.0, 3.0, 1.0), abs=1e-9)
        assert plane([0.25, 0.5, 0.0]) == approx(3.0, abs=1e-9)

    @staticmethod
    def test_frame(sphere: mesh.TriangleMesh) -> None:
        """Test the chart is orthonormal and tangent."""
        field = mesh.ScalarField(sphere.vertices[:, 0])
        plane = la_filter.fit_curvature_plane(sphere, 100, field, 2)
        e1, e2 = plane.frame
        assert abs(e1 @ e2) < 1e-12
        assert abs(e1 @ plane.normal) < 1e-12
        assert abs(e2 @ plane.normal) < 1e-12
        assert np.linalg.norm(e1) == approx(1.0, abs=1e-12)
        assert np.linalg.norm(e2) == approx(1.0, abs=1e-12)

    @staticmethod
    def test_noisy_sphere(noisy_sphere: mesh.TriangleMesh) -> None:
        """Test the target stays within the range of the samples."""
        gaussian = curvature.gaussian_curvature_field(noisy_sphere)
        reach = noisy_sphere.topology.neighborhood(2)
        for vertex in range(20):
            samples = gaussian.values[reach[[vertex]].indices]
            plane = la_filter.fit_curvature_plane(noisy_sphere, vertex, gaussian, 2)
            assert samples.min() <= plane.c2 <= samples.max()

    @staticmethod
    def test_excludes_center() -> None:
        """Test the vertex itself does not take part in its fit."""
        grid = mesh.plane(8)
        values = np.zeros(grid.n_vertices)
        values[40] = 100.0
        plane = la_filter.fit_curvature_plane(grid, 40, mesh.ScalarField(values), 2)
        assert plane.c2 == approx(0.0, abs=1e-12)

    @staticmethod
    def test_degenerate() -> None:
        """Test a vertex without usable samples falls back to its own value."""
        field = mesh.ScalarField(np.arange(7.0) + 1.0)
        plane = la_filter.fit_curvature_plane(_fan(), 0, field, 1)
        assert plane.degenerate
        assert (plane.c0, plane.c1, plane.c2) == (0.0, 0.0, 1.0)


class Test_curvature_at_offset:
    """Test curvature probes along the vertex normal."""

    @staticmethod
    def test_flat_fan() -> None:
        """Test a flat fan is flat at the centroid and convex above it."""
        fan = _fan()
        update = VertexUpdate.at(fan, 0)
        assert la_filter.curvature_at_offset(fan, update, 0.0) == approx(0.0, abs=1e-12)
        assert la_filter.curvature_at_offset(fan, update, 0.2) > 0.0

    @staticmethod
    def test_rebuilt_mesh(noisy_sphere: mesh.TriangleMesh) -> None:
        """Test probes agree with the curvature of the rebuilt mesh."""
        rng = np.random.default_rng(11)
        edge = noisy_sphere.mean_edge_length
        for vertex, phi in zip(
            rng.integers(0, noisy_sphere.n_vertices, 100),
            rng.uniform(-0.5 * edge, 0.5 * edge, 100),
        ):
            update = VertexUpdate.at(noisy_sphere, int(vertex))
            positions = noisy_sphere.vertices.copy()
            positions[vertex] = update.centroid + phi * update.normal
            rebuilt = curvature.curvature_field(noisy_sphere.with_vertices(positions))
            probed = la_filter.curvature_at_offset(noisy_sphere, update, phi)
            assert probed == approx(rebuilt.gaussian[vertex], rel=0, abs=1e-12)

    @staticmethod
    def test_monotone(sphere: mesh.TriangleMesh) -> None:
        """Test curvature grows as a convex vertex moves outwards."""
        for vertex in range(0, sphere.n_vertices, 23):
            update = VertexUpdate.at(sphere, vertex)
            reach = sphere.incident_edge_length[vertex]
            values = [
                la_filter.curvature_at_offset(sphere, update, phi)
                for phi in np.linspace(0.25 * reach, reach, 25)
            ]
            assert all(a < b for a, b in zip(values, values[1:]))

    @staticmethod
    def test_degenerate_ring() -> None:
        """Test a collapsed ring is reported."""
        sliver = mesh.TriangleMesh(
            [[0, 0, 0], [1, 0, 0], [0, 1, 0], [-1, 0, 0], [0, -1, 0]],
            [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 1]],
        )
        collapsed = sliver.with_vertices(np.zeros((5, 3)))
        update = VertexUpdate(0, centroid=[0.0, 0.0, 0.0], normal=[1.0, 0.0, 0.0])
        with raises(la_filter.DegenerateRingError):
            la_filter.curvature_at_offset(collapsed, update, 0.0)


class Test_VertexUpdate:
    """Test vertex update records."""

    @staticmethod
    def test_unit_normal() -> None:
        """Test normals must be unit vectors."""
        with raises(ValueError, match="unit"):
            VertexUpdate(0, centroid=[0, 0, 0], normal=[0, 0, 2])

    @staticmethod
    def test_fallback() -> None:
        """Test a centroid fallback sits at the centroid."""
        with raises(ValueError):
            VertexUpdate(
                0,
                centroid=[0, 0, 0],
                normal=[0, 0, 1],
                phi=0.5,
                status=UpdateStatus.FALLBACK_CENTROID,
            )

    @staticmethod
    def test_position() -> None:
        """Test the candidate position."""
        update = VertexUpdate(3, centroid=[1, 2, 3], normal=[0, 1, 0], phi=-0.5)
        assert np.allclose(update.position, [1.0, 1.5, 3.0])
        assert update.status is UpdateStatus.PENDING
        assert str(update.status) == "pending"

    @staticmethod
    def test_boundary_frozen() -> None:
        """Test boundary vertices start out frozen."""
        grid = mesh.plane(2)
        assert VertexUpdate.at(grid, 0).status is UpdateStatus.FROZEN
        assert VertexUpdate.at(grid, 4).status is UpdateStatus.PENDING


class Test_solve_offset:
    """Test the bisection for one vertex."""

    @staticmethod
    def test_flat_target() -> None:
        """Test a raised fan center returns to the rim plane."""
        fan = _fan(height=0.3)
        solved = la_filter.solve_offset(fan, VertexUpdate.at(fan, 0), 0.0)
        assert solved.status is UpdateStatus.SOLVED
        assert solved.position[2] == approx(0.0, abs=1e-9)

    @staticmethod
    def test_fixed_point(noisy_sphere: mesh.TriangleMesh) -> None:
        """Test the current curvature is accepted without moving."""
        update = VertexUpdate.at(noisy_sphere, 5)
        target = la_filter.curvature_at_offset(noisy_sphere, update, 0.0)
        solved = la_filter.solve_offset(noisy_sphere, update, target)
        assert solved.status is UpdateStatus.SOLVED
        assert solved.phi == 0.0

    @staticmethod
    def test_reaches_target(sphere: mesh.TriangleMesh) -> None:
        """Test solved offsets meet the tolerance."""
        cfg = FilterConfig()
        update = VertexUpdate.at(sphere, 7)
        target = 1.2 * la_filter.curvature_at_offset(sphere, update, 0.0) + 1.0
        solved = la_filter.solve_offset(sphere, update, target, cfg)
        assert solved.status is UpdateStatus.SOLVED
        reached = la_filter.curvature_at_offset(sphere, update, solved.phi)
        assert abs(reached - target) < cfg.tolerance(sphere)

    @staticmethod
    def test_unreachable() -> None:
        """Test targets beyond the reachable range fall back to the centroid."""
        fan = _fan(height=0.1)
        update = VertexUpdate.at(fan, 0)
        reachable = max(
            la_filter.curvature_at_offset(fan, update, phi)
            for phi in np.linspace(-300.0, 300.0, 6001)
        )
        solved = la_filter.solve_offset(fan, update, 10 * reachable)
        assert solved.status is UpdateStatus.FALLBACK_CENTROID
        assert solved.phi == 0.0
        assert np.allclose(solved.position, update.centroid)

    @staticmethod
    def test_not_finite() -> None:
        """Test non-finite targets are refused."""
        fan = _fan()
        with raises(ValueError):
            la_filter.solve_offset(fan, VertexUpdate.at(fan, 0), np.nan)


class Test_FilterConfig:
    """Test filter configuration."""

    @staticmethod
    @mark.parametrize(
        "kwargs",
        [
            param({"iterations": -1}, id="iterations"),
            param({"ring_depth": 0}, id="ring_depth"),
            param({"bisect_tol": 0.0}, id="bisect_tol"),
            param({"phi_range_init": -1.0}, id="phi_range_init"),
            param({"boundary_policy": "clamp"}, id="boundary_policy"),
            param({"threads": 0}, id="threads"),
        ],
    )
    def test_invalid(kwargs: dict) -> None:
        """Test invalid settings are refused."""
        with raises(ValueError):
            FilterConfig(**kwargs)

    @staticmethod
    def test_from_config() -> None:
        """Test building from a config section."""
        cfg = FilterConfig.from_config(
            {"iterations": 3, "bisect_tol": None, "boundary_policy": "laplace", "other": 1}
        )
        assert cfg.iterations == 3
        assert cfg.bisect_tol is None
        assert cfg.boundary_policy is BoundaryPolicy.LAPLACE

    @staticmethod
    def test_defaults(sphere: mesh.TriangleMesh) -> None:
        """Test mesh-dependent defaults."""
        cfg = FilterConfig()
        assert cfg.tolerance(sphere) == approx(1e-6 / sphere.mean_edge_length**2)
        assert np.array_equal(
            cfg.initial_range(sphere, np.array([0, 1])), sphere.incident_edge_length[[0, 1]]
        )
        fixed = FilterConfig(bisect_tol=1e-3, phi_range_init=0.5)
        assert fixed.tolerance(sphere) == 1e-3
        assert (fixed.initial_range(sphere, np.array([0, 1])) == 0.5).all()


class Test_filter_step:
    """Test single filter steps."""

    @staticmethod
    def test_flat_grid() -> None:
        """Test an exact flat grid does not move."""
        grid = mesh.plane(8)
        moved, report = la_filter.filter_step(grid)
        assert np.abs(moved.vertices - grid.vertices).max() < 1e-9
        assert report.frozen == 32
        assert report.solved == 49
        assert report.fallback == 0

    @staticmethod
    def test_laplace_boundary() -> None:
        """Test boundary vertices move to the midpoint of their boundary neighbors."""
        grid = mesh.plane(4)
        moved, report = la_filter.filter_step(grid, FilterConfig(boundary_policy="laplace"))
        ring = grid.topology.rings[0]
        expected = 0.5 * (grid.vertices[ring[0]] + grid.vertices[ring[-1]])
        assert np.allclose(moved.vertices[0], expected)
        assert np.allclose(moved.vertices[2], grid.vertices[2])
        assert report.frozen == 0

    @staticmethod
    def test_noisy_sphere(noisy_sphere: mesh.TriangleMesh) -> None:
        """Test one step reduces the radial error."""
        moved, report = la_filter.filter_step(noisy_sphere)
        assert _radial_rms(moved) < _radial_rms(noisy_sphere)
        assert (
            report.solved + report.fallback + report.frozen + report.reverted
            == noisy_sphere.n_vertices
        )
        assert moved.topology is noisy_sphere.topology

    @staticmethod
    def test_deterministic(noisy_sphere: mesh.TriangleMesh) -> None:
        """Test repeated and parallel steps are bit-identical."""
        first, _ = la_filter.filter_step(noisy_sphere)
        second, _ = la_filter.filter_step(noisy_sphere)
        parallel, report = la_filter.filter_step(noisy_sphere, FilterConfig(threads=2))
        assert np.array_equal(first.vertices, second.vertices)
        assert np.array_equal(first.vertices, parallel.vertices)
        assert report.iteration == 1

    @staticmethod
    def test_reverted_not_counted(
        monkeypatch: MonkeyPatch,
        noisy_sphere: mesh.TriangleMesh,
    ) -> None:
        """Test vertices put back after a face flip leave the solved and fallback counts."""

        def _revert_first(old: mesh.TriangleMesh, new: np.ndarray) -> np.ndarray:
            new[:5] = old.vertices[:5]
            return np.arange(5)

        monkeypatch.setattr("lafair.src.filter.step._revert_flips", _revert_first)
        moved, report = la_filter.filter_step(noisy_sphere)
        assert np.array_equal(moved.vertices[:5], noisy_sphere.vertices[:5])
        assert report.reverted == 5
        assert report.frozen == 0
        assert report.solved + report.fallback == noisy_sphere.n_vertices - 5

    @staticmethod
    def test_revert_flips() -> None:
        """Test a vertex pushed across its ring is put back."""
        fan = _fan()
        positions = fan.vertices.copy()
        positions[0] = [3.0, 0.0, 0.0]
        positions[1] = [1.01, 0.0, 0.0]
        reverted = _revert_flips(fan, positions)
        assert reverted.tolist() == [0]
        assert np.array_equal(positions[0], fan.vertices[0])
        assert np.array_equal(positions[1], [1.01, 0.0, 0.0])


class Test_filter:
    """Test the iterated filter."""

    @staticmethod
    def test_zero_iterations(noisy_sphere: mesh.TriangleMesh) -> None:
        """Test zero iterations return the input."""
        result, report = la_filter.filter(noisy_sphere, FilterConfig(iterations=0))
        assert result is noisy_sphere
        assert report.steps == ()
        assert report.final_mean_k_residual == report.initial_mean_k_residual

    @staticmethod
    def test_noise_reduction(
        sphere: mesh.TriangleMesh,
        noisy_sphere: mesh.TriangleMesh,
        caplog: LogCaptureFixture,
    ) -> None:
        """Test ten iterations halve the radial error of a noisy sphere."""
        with caplog.at_level(logging.INFO):
            fair, report = la_filter.filter(noisy_sphere)
        assert len(report.steps) == 10
        assert _radial_rms(fair) <= 0.5 * _radial_rms(noisy_sphere)
        assert report.final_mean_k_residual < report.initial_mean_k_residual

        before = curvature.gaussian_curvature_field(noisy_sphere)
        after = curvature.gaussian_curvature_field(fair)
        assert functionals.discrete_J_LAS(fair, after) < functionals.discrete_J_LAS(
            noisy_sphere, before
        )
        assert "Iteration 10/10" in caplog.text

        again, _ = la_filter.filter(noisy_sphere)
        assert np.array_equal(fair.vertices, again.vertices)

    @staticmethod
    def test_residual_never_grows() -> None:
        """Test filtering does not raise the plane residual of noisy meshes."""
        for surface in (mesh.saddle(12), mesh.cylinder(6), mesh.icosphere(2)):
            noisy = mesh.add_noise(surface, 0.2 * surface.mean_edge_length, seed=1)
            _, report = la_filter.filter(noisy, FilterConfig(iterations=5))
            assert report.final_mean_k_residual <= report.initial_mean_k_residual

    @staticmethod
    def test_sphere_is_stable(sphere: mesh.TriangleMesh) -> None:
        """Test the clean icosphere settles: displacements never grow and stay
        within 2% of the mean edge from the fourth iteration on.

        The first steps pull each vertex to its neighbor centroid before the
        normal offset restores the curvature, so they move further.
        """
        _, report = la_filter.filter(sphere)
        edge = sphere.mean_edge_length
        displacement = [step.max_displacement for step in report.steps]
        assert displacement[0] <= 0.15 * edge
        assert all(b <= a for a, b in zip(displacement, displacement[1:]))
        assert all(d <= 0.02 * edge for d in displacement[3:])

    @staticmethod
    def test_flat_grid_is_stable() -> None:
        """Test the flat grid stays put over every iteration."""
        grid = mesh.plane(16)
        _, report = la_filter.filter(grid)
        assert all(step.max_displacement <= 1e-9 for step in report.steps)

    @staticmethod
    def test_throughput() -> None:
        """Test ten iterations on about 8k faces finish within 5 s."""
        noisy = mesh.add_noise(mesh.saddle(64), 0.002, seed=2)
        assert noisy.n_faces == 8192
        _, report = la_filter.filter(noisy)
        assert report.elapsed_ms < 5000

    @staticmethod
    def test_report(noisy_sphere: mesh.TriangleMesh) -> None:
        """Test the serializable report."""
        _, report = la_filter.filter(noisy_sphere, FilterConfig(iterations=2))
        data = report.as_dict()
        assert [step["iteration"] for step in data["steps"]] == [1, 2]
        assert data["final_mean_k_residual"] == report.steps[-1].mean_k_residual
        assert set(data["steps"][0]) >= {
            "solved",
            "fallback",
            "frozen",
            "reverted",
            "max_displacement",
            "mean_k_residual",
            "elapsed_ms",
        }
