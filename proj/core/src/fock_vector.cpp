#include "qfock/fock_vector.hpp"

#include "qfock/errors.hpp"

namespace qfock {

FockVector::FockVector(Word word, Scalar coeff) {
  if (!coeff.is_zero()) terms_.emplace(std::move(word), std::move(coeff));
}

void FockVector::add(const Word& word, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar FockVector::coefficient(const Word& word) const {
  const auto it = terms_.find(word);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int FockVector::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.length(); }

FockVector FockVector::component(int n) const {
  FockVector out;
  for (const auto& [w, c] : terms_) {
    if (w.length() == n) out.terms_.emplace_hint(out.terms_.end(), w, c);
  }
  return out;
}

bool FockVector::is_homogeneous(int n) const {
  for (const auto& [w, c] : terms_) {
    if (w.length() != n) return false;
  }
  return true;
}

FockVector FockVector::padded(int left, int right, Letter pad) const {
  FockVector out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w.padded(left, right, pad), c);
  return out;
}

FockVector& FockVector::operator+=(const FockVector& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

Json FockVector::to_json() const {
  Json j = Json::object();
  for (const auto& [w, c] : terms_) j[w.str()] = c.str();
  return j;
}

FockVector FockVector::from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("FockVector JSON must be an object");
  FockVector v;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw DomainError("FockVector coefficients must be \"num/den\" strings");
    v.add(Word::parse(key), Scalar::parse(value.get<std::string>()));
  }
  return v;
}

}  // namespace qfock
