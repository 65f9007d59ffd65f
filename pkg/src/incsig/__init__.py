"""Incremental document signatures with constant-cost updates.

Signatures cover a randomize-then-combine set hash over d-wise chained
links, so inserting, replacing or deleting blocks only touches the links
around the edit instead of rehashing the whole document.
"""

from .accumulator import Accumulator, acc_add, acc_sub, acc_zero
from .backends import Ed25519Backend, HmacTestBackend, SignatureBackend
from .chainhash import RandomChain, delta_update, hash_full, link_bytes
from .document import (
    DEFAULT_PARAMS,
    BlockDocument,
    EditOp,
    SchemeParams,
    apply_edit,
    pad,
    parse_edit_script,
    unpad,
)
from .errors import IncsigError
from .randomizer import RandomizeFn
from .scheme import (
    IncrementalSignature,
    decode_signature,
    encode_signature,
    sign,
    signed_message,
    update,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "Accumulator",
    "acc_add",
    "acc_sub",
    "acc_zero",
    "BlockDocument",
    "DEFAULT_PARAMS",
    "EditOp",
    "Ed25519Backend",
    "HmacTestBackend",
    "IncrementalSignature",
    "IncsigError",
    "RandomChain",
    "RandomizeFn",
    "SchemeParams",
    "SignatureBackend",
    "apply_edit",
    "decode_signature",
    "delta_update",
    "encode_signature",
    "hash_full",
    "link_bytes",
    "pad",
    "parse_edit_script",
    "sign",
    "signed_message",
    "unpad",
    "update",
    "verify",
]
