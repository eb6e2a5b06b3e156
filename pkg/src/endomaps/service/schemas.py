"""Request and response models for the HTTP service."""

from __future__ import annotations

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, Field


class AnalyzeRequest(BaseModel):
    endofunction: str = Field(
        description='Map text: "4: 2 3 1 1" (table form) or "(1 2 3)(4->1)"'
    )


class MoveFactor(BaseModel):
    kind: Literal["move"] = "move"
    source: int
    target: int


class TranspositionFactor(BaseModel):
    kind: Literal["transposition"] = "transposition"
    a: int
    b: int


WordFactorModel = Annotated[
    Union[MoveFactor, TranspositionFactor], Field(discriminator="kind")
]


class GeneratorWordModel(BaseModel):
    core_size: int
    move_count: int
    transposition_count: int
    factors: list[WordFactorModel]


class QuotientSummary(BaseModel):
    class_count: int
    class_sizes: list[int]


class AnalyzeResponse(BaseModel):
    n: int
    endofunction: list[int]
    classification: Literal["bijection", "non-injective"]
    sign: int
    forest: bool
    height: int
    core: list[int]
    levels: list[list[int]]
    components: list[list[int]]
    factors: list[list[int]]
    generator_word: GeneratorWordModel
    quotient: QuotientSummary
    preorder_kind: Literal["equivalence", "partial-order", "both", "neither"]


class DotRequest(BaseModel):
    endofunction: str
    flavor: Literal["directed", "undirected", "quotient"] = "directed"


class DotResponse(BaseModel):
    flavor: str
    dot: str


class FactorRequest(BaseModel):
    endofunction: str
    mode: Literal["components", "word"] = "components"


class FactorResponse(BaseModel):
    mode: Literal["components", "word"]
    factors: Optional[list[list[int]]] = None
    word: Optional[GeneratorWordModel] = None


class HomRequest(BaseModel):
    dom: str
    cod: str
    max_tables: int = Field(default=10**6, ge=1)


class HomResponse(BaseModel):
    count: int
    morphisms: list[list[int]]


class VerifyRequest(BaseModel):
    bound: int = Field(default=4, ge=1)
    suite: Literal["all", "factorization", "monoid", "pretorsion", "bridges"] = "all"
    force: bool = False


class CheckResultModel(BaseModel):
    name: str
    instances: int
    elapsed_seconds: float
    passed: bool
    witness: Optional[str] = None


class VerifyResponse(BaseModel):
    suite: str
    bound: int
    passed: bool
    results: list[CheckResultModel]
