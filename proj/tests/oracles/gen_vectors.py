#!/usr/bin/env python3

# Copyright 2026 The Certchain Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent reference for the golden vectors frozen into the C++ tests.

Uses pycryptodome (Keccak/SHA3) and coincurve (libsecp256k1) and re-implements
the wire layouts from scratch, sharing no code with the C++ tree.

    pip install pycryptodome coincurve
    python3 tests/oracles/gen_vectors.py
"""

import hashlib
import json
import struct

import coincurve
from Crypto.Hash import keccak


def keccak256(data: bytes) -> bytes:
    h = keccak.new(digest_bits=256)
    h.update(data)
    return h.digest()


def hx(b: bytes) -> str:
    return "0x" + b.hex()


def address_of(priv: bytes) -> bytes:
    pub = coincurve.PrivateKey(priv).public_key.format(compressed=False)[1:]
    return keccak256(pub)[-20:]


def u64(v):
    return struct.pack(">Q", v)


def u128(v):
    return v.to_bytes(16, "big")


REGISTRY = bytes.fromhex("00" * 18 + "0100")

FUNCTION_CODES = {
    "addCertificate": 1,
    "readCertificatePublic": 2,
    "isValidCertificate": 3,
    "getListCertificateStatus": 4,
}


def encode_tx(tx):
    out = u64(tx["chain_id"]) + u64(tx["nonce"]) + tx["from"] + tx["to"]
    out += u128(tx["value"]) + u64(tx["gas_limit"]) + u64(tx["gas_price"])
    if tx.get("function") is None:
        return out + b"\x00"
    out += b"\x01" + bytes([FUNCTION_CODES[tx["function"]]])
    out += struct.pack(">H", len(tx["args"]))
    for a in tx["args"]:
        raw = a.encode("utf-8")
        out += struct.pack(">I", len(raw)) + raw
    return out


def sign(priv: bytes, digest: bytes):
    sig = coincurve.PrivateKey(priv).sign_recoverable(digest, hasher=None)
    return sig[:32], sig[32:64], sig[64]


def encode_header(h):
    return (
        u64(h["number"]) + h["parent_hash"] + u64(h["timestamp"]) + h["sealer"]
        + u64(h["gas_limit"]) + u64(h["gas_used"]) + h["tx_root"] + h["state_root"]
    )


def str32(s: str) -> bytes:
    raw = s.encode("utf-8")
    return struct.pack(">I", len(raw)) + raw


def state_root(accounts, certs, cert_count, registrar):
    """accounts: {addr: (balance, nonce)}, certs: {certNo: [7 fields]}"""
    out = b"certchain/state/v1"
    out += u64(len(accounts))
    for addr in sorted(accounts):
        bal, nonce = accounts[addr]
        out += addr + u128(bal) + u64(nonce)
    out += u64(len(certs))
    for cert_no in sorted(certs, key=lambda s: s.encode("utf-8")):
        for field in certs[cert_no]:
            out += str32(field)
    out += u64(cert_count) + registrar
    return keccak256(out)


def config_digest(cfg):
    out = b"certchain/genesis/v1"
    out += u64(cfg["chain_id"]) + u64(cfg["block_period_ms"]) + u64(cfg["block_gas_limit"])
    out += u64(cfg["timestamp"])
    out += struct.pack(">I", len(cfg["authorities"])) + b"".join(cfg["authorities"])
    out += cfg["registrar"] + REGISTRY
    out += u64(21000) + u64(343838)
    allocs = sorted(cfg["allocations"].items())
    out += struct.pack(">I", len(allocs))
    for addr, bal in allocs:
        out += addr + u128(bal)
    return keccak256(out)


def main():
    v = {}
    v["keccak_empty"] = hx(keccak256(b""))
    v["keccak_abc"] = hx(keccak256(b"abc"))
    v["sha3_abc"] = hx(hashlib.sha3_256(b"abc").digest())
    v["keccak_1000_a"] = hx(keccak256(b"a" * 1000))

    keys = {
        "one": (1).to_bytes(32, "big"),
        "two": (2).to_bytes(32, "big"),
        "web3_doc": bytes.fromhex("4c0883a69102937d6231471b5dbb6204fe5129617082792ae468d01a3f362318"),
        "dev_registrar": keccak256(b"certchain dev registrar"),
        "dev_sealer": keccak256(b"certchain dev sealer"),
    }
    v["keys"] = {name: {"priv": hx(k), "address": hx(address_of(k))} for name, k in keys.items()}

    reg = keys["dev_registrar"]
    tx = {
        "chain_id": 496,
        "nonce": 7,
        "from": address_of(reg),
        "to": REGISTRY,
        "value": 0,
        "gas_limit": 343838,
        "gas_price": 1000000000,
        "function": "addCertificate",
        "args": ["C001", "Alice", "990101-14-1234", "S1001", "Comp Sci", "2024-10-01", "2024/1"],
    }
    enc = encode_tx(tx)
    digest = keccak256(enc)
    r, s, recid = sign(reg, digest)
    signed = enc + r + s + bytes([recid])
    v["tx"] = {
        "encoding": hx(enc),
        "signing_digest": hx(digest),
        "r": hx(r),
        "s": hx(s),
        "recovery_id": recid,
        "tx_hash": hx(keccak256(signed)),
    }

    transfer = dict(tx, function=None, nonce=0, value=5, gas_limit=21000, to=address_of(keys["one"]))
    enc_t = encode_tx(transfer)
    v["transfer_encoding"] = hx(enc_t)

    # Default shipped genesis: testbed allocation plus the dev registrar.
    testbed_addr = bytes.fromhex("80ce17271ffa4a7f66e2cbf3561a6946587f470d")
    million = 10**24
    accounts = {testbed_addr: (million, 0)}
    root_testbed = state_root(accounts, {}, 0, testbed_addr)
    v["testbed_genesis_state_root"] = hx(root_testbed)

    dev_accounts = {testbed_addr: (million, 0), address_of(reg): (million, 0)}
    dev_root = state_root(dev_accounts, {}, 0, address_of(reg))
    v["dev_genesis_state_root"] = hx(dev_root)

    # dev genesis + one successful addCertificate (nonce 0, gas price 1 gwei).
    cert = ["C001", "Alice", "990101-14-1234", "S1001", "Comp Sci", "2024-10-01", "2024/1"]
    after = {
        testbed_addr: (million, 0),
        address_of(reg): (million - 343838 * 1000000000, 1),
    }
    v["dev_state_root_after_one_cert"] = hx(state_root(after, {"C001": cert}, 1, address_of(reg)))

    empty_tx_root = keccak256(b"")
    sealer = address_of(keys["dev_sealer"])
    configs = {
        "testbed": (root_testbed, testbed_addr, {testbed_addr: million}),
        "dev": (dev_root, address_of(reg), {testbed_addr: million, address_of(reg): million}),
    }
    for name, (root, registrar, allocs) in configs.items():
        cfg = {
            "chain_id": 496,
            "block_period_ms": 5000,
            "block_gas_limit": 27507108,
            "timestamp": 0,
            "authorities": [sealer],
            "registrar": registrar,
            "allocations": allocs,
        }
        header = {
            "number": 0,
            "parent_hash": config_digest(cfg),
            "timestamp": 0,
            "sealer": b"\x00" * 20,
            "gas_limit": 27507108,
            "gas_used": 0,
            "tx_root": empty_tx_root,
            "state_root": root,
        }
        v[f"{name}_genesis_config_digest"] = hx(config_digest(cfg))
        v[f"{name}_genesis_hash"] = hx(keccak256(encode_header(header)))

    print(json.dumps(v, indent=2))


if __name__ == "__main__":
    main()
