"""Unit tests for hypothesis trails and rigidity verdicts."""

import pytest
from pytest_mock import MockerFixture

from zd_rigidity import fixtures, hypothesis_trail, verdict
from zd_rigidity.config import EngineSettings
from zd_rigidity.errors import BudgetExceededError
from zd_rigidity.models.presentation import ModulePresentation
from zd_rigidity.models.reports import (
    CertificationLevel,
    MixingCertified,
    NoWitnessUpTo,
    RigidityVerdict,
    VerdictKind,
)


class TestHypothesisTrail:
    """Tests for hypothesis_trail."""

    def test_ledrappier_trail(
        self, ledrappier: ModulePresentation, fast_settings: EngineSettings
    ) -> None:
        """Test every hypothesis for the three-dot system."""
        trail = hypothesis_trail(ledrappier, 2, fast_settings)
        assert trail.system == "ledrappier"
        assert trail.connected.connected
        assert trail.mixing == NoWitnessUpTo(bound=2)
        assert trail.mixing_level == CertificationLevel.BOUNDED_SEARCH
        assert trail.noetherian.noetherian
        assert trail.entropy.finite

    def test_full_shift_trail(self, fast_settings: EngineSettings) -> None:
        """Test that the full shift is certified mixing with infinite entropy."""
        trail = hypothesis_trail(fixtures.full_shift(1), 2, fast_settings)
        assert isinstance(trail.mixing, MixingCertified)
        assert trail.mixing_level == CertificationLevel.CERTIFIED
        assert not trail.entropy.finite


class TestVerdict:
    """Tests for verdict."""

    def test_ledrappier_to_itself_is_rigid(
        self, ledrappier: ModulePresentation, fast_settings: EngineSettings
    ) -> None:
        """Test that self-maps of the three-dot system are affine."""
        result = verdict(ledrappier, ledrappier, 1, fast_settings)
        assert result.verdict == VerdictKind.RIGID
        assert result.failed_hypotheses == []
        assert len(result.assumptions) == 2
        assert all("no witness up to 1" in note for note in result.assumptions)

    def test_infinite_entropy_target(
        self, ledrappier: ModulePresentation, fast_settings: EngineSettings
    ) -> None:
        """Test that a full-shift target is not rigid."""
        result = verdict(ledrappier, fixtures.full_shift(2), 1, fast_settings)
        assert result.verdict == VerdictKind.NOT_RIGID
        assert not result.target.entropy.finite

    def test_full_shift_source(
        self, ledrappier: ModulePresentation, fast_settings: EngineSettings
    ) -> None:
        """Test that only the entropy of the target decides."""
        result = verdict(fixtures.full_shift(2), ledrappier, 1, fast_settings)
        assert result.verdict == VerdictKind.RIGID

    @pytest.mark.parametrize(
        ("target_name", "expected"),
        [("ledrappier", VerdictKind.RIGID), ("full-shift", VerdictKind.NOT_RIGID)],
    )
    def test_verdict_depends_only_on_target(
        self, target_name: str, expected: VerdictKind, fast_settings: EngineSettings
    ) -> None:
        """Test that connected mixing sources all give the verdict fixed by the target."""
        targets = {"ledrappier": fixtures.ledrappier(), "full-shift": fixtures.full_shift(2)}
        sources = [fixtures.ledrappier(), fixtures.full_shift(2), fixtures.torus_shift(2, 2)]
        kinds = {verdict(M1, targets[target_name], 1, fast_settings).verdict for M1 in sources}
        assert kinds == {expected}

    def test_disconnected_source(
        self,
        two_torsion: ModulePresentation,
        ledrappier: ModulePresentation,
        fast_settings: EngineSettings,
    ) -> None:
        """Test that a disconnected system makes the criterion inapplicable."""
        result = verdict(two_torsion, ledrappier, 1, fast_settings)
        assert result.verdict == VerdictKind.INAPPLICABLE
        assert len(result.failed_hypotheses) == 1
        assert "X1 (two-torsion) is not connected" in result.failed_hypotheses[0]

    def test_non_mixing_target(
        self,
        ledrappier: ModulePresentation,
        diagonal_binomial: ModulePresentation,
        fast_settings: EngineSettings,
    ) -> None:
        """Test that a non-mixing target makes the criterion inapplicable."""
        result = verdict(ledrappier, diagonal_binomial, 2, fast_settings)
        assert result.verdict == VerdictKind.INAPPLICABLE
        assert any("X2 (diagonal-binomial) is not mixing" in f for f in result.failed_hypotheses)

    def test_dimension_mismatch_noted(
        self,
        times_two: ModulePresentation,
        ledrappier: ModulePresentation,
        fast_settings: EngineSettings,
    ) -> None:
        """Test that actions of different rank are compared with a note."""
        result = verdict(times_two, ledrappier, 1, fast_settings)
        assert result.verdict == VerdictKind.RIGID
        assert any("Z^1-action" in note for note in result.assumptions)

    def test_verdict_survives_json(
        self, ledrappier: ModulePresentation, fast_settings: EngineSettings
    ) -> None:
        """Test that a verdict validates back from its JSON form."""
        result = verdict(ledrappier, fixtures.full_shift(2), 1, fast_settings)
        restored = RigidityVerdict.model_validate_json(result.model_dump_json())
        assert restored == result

    def test_budget_error_propagates(
        self, ledrappier: ModulePresentation, fast_settings: EngineSettings, mocker: MockerFixture
    ) -> None:
        """Test that an exhausted Gröbner budget is raised, not folded into the verdict."""
        mocker.patch(
            "zd_rigidity.rigidity.mixing_search",
            side_effect=BudgetExceededError("pair limit", 3, 3),
        )
        with pytest.raises(BudgetExceededError) as exc_info:
            verdict(ledrappier, ledrappier, 1, fast_settings)
        assert exc_info.value.pairs_consumed == 3
