#include "fluid/run_record.hpp"

#include <array>
#include <fstream>

#include <sodium.h>

#include "fluid/errors.hpp"

namespace fluid {

std::string_view library_version() { return FLUID_VERSION_STRING; }

std::string file_digest(const std::filesystem::path& path) {
  static const bool ready = sodium_init() >= 0;
  if (!ready) throw std::runtime_error("libsodium initialisation failed");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StreamAborted("cannot open " + path.string());
  crypto_generichash_state state;
  std::array<unsigned char, 32> digest{};
  crypto_generichash_init(&state, nullptr, 0, digest.size());
  std::array<char, 1 << 16> buffer{};
  while (in) {
    in.read(buffer.data(), buffer.size());
    const auto n = in.gcount();
    if (n > 0) {
      crypto_generichash_update(&state, reinterpret_cast<const unsigned char*>(buffer.data()),
                                static_cast<unsigned long long>(n));
    }
  }
  if (in.bad()) throw StreamAborted("read failed: " + path.string());
  crypto_generichash_final(&state, digest.data(), digest.size());
  std::array<char, 65> hex{};
  sodium_bin2hex(hex.data(), hex.size(), digest.data(), digest.size());
  return std::string(hex.data());
}

void RunRecord::add_input(const std::filesystem::path& path) {
  inputs.emplace_back(path.string(), file_digest(path));
}

nlohmann::json to_json(const RunRecord& record) {
  nlohmann::json inputs = nlohmann::json::array();
  for (const auto& [path, digest] : record.inputs) {
    inputs.push_back({{"path", path}, {"blake2b", digest}});
  }
  return {{"tool", "fluid"},
          {"version", std::string(library_version())},
          {"command", record.command},
          {"flags", record.flags},
          {"inputs", inputs}};
}

}  // namespace fluid
