#include "lrc/subset.hpp"

#include <algorithm>

#include "lrc/error.hpp"

namespace lrc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kMissingSubset: return "MissingSubset";
    case ErrorCode::kNotInLattice: return "NotInLattice";
    case ErrorCode::kInvalidMatroid: return "InvalidMatroid";
    case ErrorCode::kNotAlmostAffine: return "NotAlmostAffine";
    case ErrorCode::kSingletonCode: return "SingletonCode";
    case ErrorCode::kRankZero: return "RankZero";
    case ErrorCode::kTopNotE: return "TopNotE";
    case ErrorCode::kNoLocality: return "NoLocality";
    case ErrorCode::kChainStalled: return "ChainStalled";
    case ErrorCode::kConditionViolated: return "ConditionViolated";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kNoDonorPair: return "NoDonorPair";
    case ErrorCode::kNoExcessNullity: return "NoExcessNullity";
    case ErrorCode::kSchemaError: return "SchemaError";
  }
  return "Unknown";
}

Subset Subset::of(std::initializer_list<int> elements) {
  return of(std::span<const int>(elements.begin(), elements.size()));
}

Subset Subset::of(std::span<const int> elements) {
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 0 || e >= kMaxGroundSize) {
      throw Error(ErrorCode::kTooLarge, "element index " + std::to_string(e) + " outside 0..63");
    }
    bits |= std::uint64_t{1} << e;
  }
  return Subset(bits);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string Subset::to_string_one_based() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ",";
    out += std::to_string(e + 1);
    first = false;
  }
  return out + "}";
}

bool lex_less(Subset a, Subset b) {
  // Walk both element lists in increasing order.
  std::uint64_t x = a.bits();
  std::uint64_t y = b.bits();
  while (x != 0 && y != 0) {
    const int ex = std::countr_zero(x);
    const int ey = std::countr_zero(y);
    if (ex != ey) return ex < ey;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

void canonicalize(SubsetFamily& family) {
  std::sort(family.begin(), family.end(), lex_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace lrc
