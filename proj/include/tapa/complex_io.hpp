#pragma once

#include <complex>
#include <string>

namespace tapa {

using Cplx = std::complex<double>;

/// Parses a complex literal of the form "a+bi" / "a-bi" ("2", "-1.5e-3i",
/// "1+i" are all accepted). Locale-independent. Throws DomainError on junk.
Cplx parse_complex(const std::string& text);

/// Formats with enough digits to round-trip ("a+bi" / "a-bi").
std::string format_complex(const Cplx& z);

} // namespace tapa
