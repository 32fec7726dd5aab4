import json

import pytest
from pydantic import ValidationError

from core.schemas import (
    SCHEMA_VERSION,
    CanonicalWordReport,
    CountReport,
    DiagramEntry,
    FailureReport,
    StrataReport,
    StratumEntry,
    SuiteEntry,
    TangentEntry,
    VerifyReport,
    WordStepEntry,
    DeformationReport,
)


def strata_report():
    return StrataReport(
        n=2,
        m=1,
        strata=[StratumEntry(w="123", length=0, a_sigma=2, in_s_sharp=False, is_fol=False, fiber_dim=1)],
        covers=[["132", "123"]],
        maximal=["312"],
        minimal=["123"],
        diagram=DiagramEntry(closure_equal=True, covers_equal=True),
    )


REPORTS = [
    strata_report(),
    CountReport(
        p=3,
        n=2,
        m=1,
        closed_form=27,
        exponents=[2, 0, 1],
        brute_force=27,
        degrees={"deg_rho": 3},
        skipped=["oracle: requer 91, guard 10"],
        elapsed=0.25,
    ),
    CanonicalWordReport(
        n=3,
        m=2,
        p=3,
        r=1,
        result=[4, 3],
        expected=[4, 3],
        matrix_result=["e1", "f3"],
        trace=[WordStepEntry(word="V^-1(0)", a=3, b=2, expected_a=3, expected_b=2)],
    ),
    DeformationReport(
        n=2,
        m=1,
        p=3,
        omega_sigma=[{"e1": "1+0*t"}],
        omega_sigma_bar=[{"f2": "1+0*t"}],
        target=["e1^(p)"],
        residues={"1": {"u_1_1": {"e3^(p)": "2+0*t"}}},
        ideal=["u_1_1"],
        ideal_indexed=["u_{1,2}"],
        tangent=TangentEntry(total_dim=2, foliation_dim=1, fiber_dim=0),
        foliation_generators=["v_1_1"],
    ),
    VerifyReport(max_nm=3, p=3, suites=[SuiteEntry(name="field", is_valid=True, checked=729)], passed=True),
    FailureReport(check="demo", expected=[1], actual=None, error="demo: esperado [1], obtido None"),
]


@pytest.mark.parametrize("report", REPORTS, ids=lambda r: type(r).__name__)
def test_json_round_trip(report):
    text = report.model_dump_json()
    assert type(report).model_validate_json(text) == report
    data = json.loads(text)
    assert data["schema"] == SCHEMA_VERSION
    assert "schema_version" not in data


def test_strict_types():
    with pytest.raises(ValidationError):
        StratumEntry(w="123", length="0", a_sigma=2, in_s_sharp=False, is_fol=False, fiber_dim=1)
    with pytest.raises(ValidationError):
        VerifyReport(max_nm=1, p=3, suites=[], passed=True)


def test_schema_version_is_fixed():
    data = json.loads(strata_report().model_dump_json())
    data["schema"] = "eo-folkit/0"
    with pytest.raises(ValidationError):
        StrataReport.model_validate_json(json.dumps(data))
