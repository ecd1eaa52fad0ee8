from typing import Literal

from pydantic import BaseModel, Field, model_validator

from toricsplit.common.env import blowup_cap

HARD_BLOWUP_CAP: int = 12


class RunConfig(BaseModel):
    """Validated options of one CLI invocation."""

    subcommand: Literal['surfaces', 'q-matrix', 'tangent-split', 'bundle-split', 'table41']
    k: int|None = Field(default=None, ge=0, le=HARD_BLOWUP_CAP)
    strict_signs: bool = False
    output_format: Literal['text', 'tsv'] = 'text'
    fan_path: str|None = None
    bundle_path: str|None = None
    euler_path: str|None = None
    graph: str|None = None
    dual: bool = False

    @model_validator(mode='after')
    def check_inputs(self) -> 'RunConfig':
        if self.subcommand == 'surfaces':
            if self.k is None:
                raise ValueError("surfaces needs --k")

            cap: int = min(blowup_cap(), HARD_BLOWUP_CAP)
            if self.k > cap:
                raise ValueError(f"--k {self.k} exceeds the blowup cap {cap}, raise TSP_BLOWUP_CAP up to {HARD_BLOWUP_CAP}")

        if self.subcommand in ('q-matrix', 'tangent-split'):
            if (self.fan_path is None) == (self.graph is None):
                raise ValueError(f"{self.subcommand} needs exactly one of --fan or --graph")

        if self.subcommand == 'bundle-split':
            if self.fan_path is None:
                raise ValueError("bundle-split needs --fan")

            if (self.bundle_path is None) == (self.euler_path is None):
                raise ValueError("bundle-split needs exactly one of --bundle or --euler")

        return self
