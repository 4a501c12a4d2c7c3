#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "dadda/netlist.hpp"

namespace dadda {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kNetlistFormatVersion = 1;

// Serialization is byte-stable: field order is fixed and ids are integers,
// so equal netlists produce equal files on every run.
std::string netlist_to_json(const Netlist& nl);
Netlist netlist_from_json(const std::string& text);

void save_netlist(const Netlist& nl, const std::filesystem::path& file);
Netlist load_netlist(const std::filesystem::path& file);

std::string read_file(const std::filesystem::path& file);
void write_file(const std::filesystem::path& file, std::string_view content);

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);  // "0x" + 16 hex digits

}  // namespace dadda
