from sasgames.certificates.certificate import (
    Certificate,
    OddBlock,
    ProductWitness,
    build_certificate,
    certificate_from_json,
    certificate_to_json,
    verify_certificate,
)

__all__ = [
    "Certificate",
    "OddBlock",
    "ProductWitness",
    "build_certificate",
    "certificate_from_json",
    "certificate_to_json",
    "verify_certificate",
]
