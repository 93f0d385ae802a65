// Machine-readable reports.  Conventions: exact values are serialized as
// rational-pair strings {"a": "p/q", "b": "r/s"} meaning a + b*sqrt2, never
// as decimals; floating-point values are serialized as decimal strings.

#ifndef TORUSSPEC_REPORT_HPP
#define TORUSSPEC_REPORT_HPP

#include "torusspec/blocks.hpp"
#include "torusspec/equivariant.hpp"
#include "torusspec/killing.hpp"
#include "torusspec/oracle.hpp"

#include <json.hpp>

#include <string>

namespace torusspec::report {

using Json = nlohmann::ordered_json;

std::string double_to_string(double v);
Json qs2_to_json(const QSqrt2& v);
Json spectrum_to_json(const SpectrumReport& rep);
Json composition_to_json(const CompositionCheck& check, int m_dim);
Json pharmonic_rows_to_json(const std::vector<PharmonicRow>& rows);
Json kernel_to_json(const KernelReport& rep);

std::string spectrum_to_text(const SpectrumReport& rep);
std::string kernel_to_text(const KernelReport& rep);

extern const char* kBasisOrderingNote;

} // namespace torusspec::report

#endif
