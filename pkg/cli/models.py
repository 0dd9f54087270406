from enum import Enum
from fractions import Fraction
from typing import List, Literal, Optional, Union

from pydantic import BaseModel

from arithmonoid.arith import ArithElement, Zero
from arithmonoid.numtheory import CongruenceClass
from arithmonoid.polycyclic import PolyElement, PolyZero


class DigitOrder(str, Enum):
    MSB = "msb"
    LSB = "lsb"


class ClassModel(BaseModel):
    mod: str
    res: str

    @classmethod
    def of(cls, c: CongruenceClass) -> "ClassModel":
        return cls(mod=str(c.modulus), res=str(c.residue))


class ZeroModel(BaseModel):
    zero: Literal[True] = True


class NormalFormModel(BaseModel):
    dom: ClassModel
    img: ClassModel


ElementModel = Union[ZeroModel, NormalFormModel]


def element_model(e: ArithElement) -> ElementModel:
    if isinstance(e, Zero):
        return ZeroModel()
    return NormalFormModel(dom=ClassModel.of(e.dom), img=ClassModel.of(e.img))


class RationalModel(BaseModel):
    numerator: str
    denominator: str

    @classmethod
    def of(cls, value: Fraction) -> "RationalModel":
        return cls(numerator=str(value.numerator), denominator=str(value.denominator))


class ApplyResult(BaseModel):
    element: ElementModel
    n: str
    value: Optional[str]


class IntersectResult(BaseModel):
    left: ClassModel
    right: ClassModel
    intersection: Optional[ClassModel]


class PrimeGenerator(BaseModel):
    p: str
    q: str


class FactorResult(BaseModel):
    a: str
    b: str
    factors: List[PrimeGenerator]


class PolyModel(BaseModel):
    k: str
    zero: bool
    up: Optional[str] = None
    down: Optional[str] = None

    @classmethod
    def of(cls, k: int, e: PolyElement) -> "PolyModel":
        if isinstance(e, PolyZero):
            return cls(k=str(k), zero=True)
        return cls(k=str(k), zero=False, up=str(e.up), down=str(e.down))


class PairModel(BaseModel):
    first: str
    second: str


class PAdicResult(BaseModel):
    operation: str
    p: str
    arguments: List[str]
    value: RationalModel


class NormRow(BaseModel):
    n: str
    numerator: str
    denominator: str


class AuditSummaryRow(BaseModel):
    p: str
    digit_order: DigitOrder
    holds: str
    fails: str
    first_counterexample: Optional[str]


class OracleCheckResult(BaseModel):
    expression: str
    symbolic: ElementModel
    window: str
    margin: str
    compared_points: str
    core_agrees: bool
    pointwise_mismatches: str
    ok: bool


class FuzzResult(BaseModel):
    seed: Optional[str]
    count: str
    window: str
    failures: List[str]


RESULT_MODELS = {
    "element": NormalFormModel,
    "zero": ZeroModel,
    "apply": ApplyResult,
    "intersect": IntersectResult,
    "factor": FactorResult,
    "poly": PolyModel,
    "pair": PairModel,
    "padic": PAdicResult,
    "padic_table_row": NormRow,
    "padic_audit_row": AuditSummaryRow,
    "oracle_check": OracleCheckResult,
    "oracle_fuzz": FuzzResult,
}
