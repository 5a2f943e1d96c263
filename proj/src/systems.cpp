#include "chainscope/systems.hpp"

#include "chainscope/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace chainscope {

IntervalSystem make_interval_system(std::string name, PiecewiseMap map, std::size_t grid_n,
                                    std::span<const double> required) {
  std::vector<double> forced(required.begin(), required.end());
  for (const MapPiece& piece : map.pieces()) {
    if (piece.part.is_point()) forced.push_back(piece.part.lo);
  }
  std::vector<double> samples = grid_sample(map.lo(), map.hi(), grid_n, forced);
  return IntervalSystem(
      std::move(name), [map = std::move(map)](const double& x) { return map(x); },
      [](const double& a, const double& b) { return std::abs(a - b); }, std::move(samples),
      [](const double& x) { return format_real(x); });
}

CycleSystem make_cycle_system(std::size_t n) {
  if (n < 2) throw ArgumentError("cycle needs n >= 2, got " + std::to_string(n));
  const auto size = static_cast<std::int64_t>(n);
  std::vector<std::int64_t> samples(n);
  for (std::int64_t i = 0; i < size; ++i) samples[static_cast<std::size_t>(i)] = i;
  return CycleSystem(
      "cycle", [size](const std::int64_t& x) { return (x + 1) % size; },
      [size](const std::int64_t& a, const std::int64_t& b) {
        std::int64_t diff = std::abs(a - b) % size;
        return static_cast<double>(std::min(diff, size - diff)) / static_cast<double>(size);
      },
      std::move(samples), [](const std::int64_t& x) { return std::to_string(x); });
}

ShiftSystem make_shift_system(SubshiftId id, std::size_t truncation) {
  Subshift shift(id);
  return ShiftSystem(
      shift.name(), [](const Word& w) { return w.shifted(); },
      [](const Word& a, const Word& b) { return word_dist(a, b); }, shift.universe(truncation),
      [](const Word& w) { return w.label(); });
}

const std::vector<std::string>& builtin_system_names() {
  static const std::vector<std::string> names{"akin", "square", "logistic4", "identity", "cycle", "sigma1", "sigma2"};
  return names;
}

AnySystem builtin_system(const SystemConfig& config) {
  const std::string& name = config.system;
  if (name == "akin") return make_interval_system(name, akin_map(), config.grid_n, config.required_points);
  if (name == "square") return make_interval_system(name, square_map(), config.grid_n, config.required_points);
  if (name == "logistic4") {
    return make_interval_system(name, logistic4_map(), config.grid_n, config.required_points);
  }
  if (name == "identity") return make_interval_system(name, identity_map(), config.grid_n, config.required_points);
  if (name == "cycle") return make_cycle_system(config.cycle_n);
  if (name == "sigma1" || name == "sigma2") {
    if (config.truncation_k < 1) throw ArgumentError("truncation_k must be >= 1");
    return make_shift_system(name == "sigma1" ? SubshiftId::Sigma1 : SubshiftId::Sigma2, config.truncation_k);
  }
  throw ArgumentError("unknown system '" + name + "'");
}

std::size_t sample_count(const AnySystem& system) {
  return std::visit([](const auto& s) { return s.size(); }, system);
}

std::string system_name(const AnySystem& system) {
  return std::visit([](const auto& s) { return s.name(); }, system);
}

std::vector<std::string> sample_labels(const AnySystem& system) {
  return std::visit(
      [](const auto& s) {
        std::vector<std::string> out;
        out.reserve(s.size());
        for (const auto& state : s.samples()) out.push_back(s.label(state));
        return out;
      },
      system);
}

namespace {

template <class Number>
Number parse_number(std::string_view token) {
  Number value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ArgumentError("cannot parse state '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::size_t resolve_sample(const AnySystem& system, std::string_view token) {
  const std::size_t n = sample_count(system);
  if (token.starts_with('#')) {
    auto index = parse_number<std::size_t>(token.substr(1));
    if (index >= n) {
      throw ArgumentError("sample index " + std::to_string(index) + " out of range (n = " + std::to_string(n) + ")");
    }
    return index;
  }
  std::optional<std::size_t> found = std::visit(
      [token](const auto& s) -> std::optional<std::size_t> {
        using State = typename std::decay_t<decltype(s)>::state_type;
        if constexpr (std::is_same_v<State, Word>) {
          return s.sample_index(Word::parse(token));
        } else {
          return s.sample_index(parse_number<State>(token));
        }
      },
      system);
  if (!found) throw ArgumentError("state '" + std::string(token) + "' is not a sample of the system");
  return *found;
}

}  // namespace chainscope
