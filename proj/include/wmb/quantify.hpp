#pragma once

#include <array>
#include <optional>
#include <sstream>

#include "wmb/laws.hpp"

namespace wmb::detail {

// Run a check over all K-tuples of basis keys: exhaustively on the dense
// backend, over sampled tuples on the lazy one. The check returns a witness
// string on failure and nullopt on success.
template <int K, class F>
LawResult quantified(Workbench& wb, const std::string& id, F&& check) {
  LawResult r;
  r.id = id;
  const Instance& w = wb.w();
  if (w.is_dense()) {
    int n = w.A.dim();
    std::array<Key, K> t{};
    while (true) {
      if (auto wit = check(t)) {
        r.status = LawResult::Status::Fail;
        r.witness = *wit;
        return r;
      }
      int pos = K - 1;
      while (pos >= 0) {
        if (++t[size_t(pos)] < n) break;
        t[size_t(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    return r;
  }
  r.sampled = true;
  r.samples = wb.sampler().count();
  r.seed = wb.sampler().seed();
  for (const auto& t : wb.sampler().template tuples<K>(w.A)) {
    if (auto wit = check(t)) {
      r.status = LawResult::Status::Fail;
      r.witness = *wit;
      return r;
    }
  }
  return r;
}

template <std::size_t K>
std::string tuple_str(const Algebra& A, const std::array<Key, K>& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < K; ++i) os << (i ? ", " : "") << A.label(t[i]);
  os << ")";
  return os.str();
}

template <class E, std::size_t K>
std::optional<std::string> expect_eq(const Algebra& A, const std::array<Key, K>& t,
                                     const char* what, const E& lhs, const E& rhs) {
  if (lhs == rhs) return std::nullopt;
  std::ostringstream os;
  os << what << " at " << tuple_str<K>(A, t) << ": lhs = " << A.str(lhs)
     << ", rhs = " << A.str(rhs);
  return os.str();
}

template <std::size_t K>
std::optional<std::string> expect_eq_rat(const Algebra& A, const std::array<Key, K>& t,
                                         const char* what, const Rat& lhs, const Rat& rhs) {
  if (lhs == rhs) return std::nullopt;
  std::ostringstream os;
  os << what << " at " << tuple_str<K>(A, t) << ": lhs = " << rat_str(lhs)
     << ", rhs = " << rat_str(rhs);
  return os.str();
}

inline LawResult skip(const std::string& id, const std::string& reason) {
  LawResult r;
  r.id = id;
  r.status = LawResult::Status::Skip;
  r.skip_reason = reason;
  return r;
}

}  // namespace wmb::detail
