#include "superfed/chart.hpp"

#include <algorithm>
#include <cctype>

#include "superfed/errors.hpp"

namespace superfed {

bool is_identifier(std::string_view s) noexcept {
  if (s.empty()) return false;
  const auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

Chart::Chart(std::vector<Coordinate> coordinates) : coords_(std::move(coordinates)) {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const auto& c = coords_[i];
    if (!is_identifier(c.name)) {
      throw precondition_error("coordinate name '" + c.name + "' is not an identifier");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (coords_[j].name == c.name) {
        throw precondition_error("duplicate coordinate name '" + c.name + "'");
      }
    }
    if (is_odd(c.parity)) {
      slot_.push_back(odd_names_.size());
      odd_names_.push_back(c.name);
    } else {
      slot_.push_back(even_names_.size());
      even_names_.push_back(c.name);
    }
  }
  sig_ = {even_names_.size(), odd_names_.size()};
  if (sig_.even > max_even_coordinates || sig_.odd > max_odd_coordinates) {
    throw signature_error("chart has too many coordinates");
  }
}

Chart Chart::standard(std::size_t p, std::size_t q) {
  std::vector<Coordinate> coords;
  for (std::size_t i = 1; i <= p; ++i) coords.push_back({"x" + std::to_string(i), Parity::even});
  for (std::size_t i = 1; i <= q; ++i) coords.push_back({"th" + std::to_string(i), Parity::odd});
  return Chart(std::move(coords));
}

std::optional<std::size_t> Chart::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].name == name) return i;
  }
  return std::nullopt;
}

Superfunction Chart::coordinate_function(std::size_t i) const {
  return is_odd(parity(i)) ? Superfunction::odd_coordinate(sig_, slot(i))
                           : Superfunction::even_coordinate(sig_, slot(i));
}

Superfunction Chart::partial(std::size_t i, const Superfunction& f) const {
  check(f);
  return is_odd(parity(i)) ? partial_odd(f, slot(i)) : partial_even(f, slot(i));
}

void Chart::check(const Superfunction& f) const {
  if (f.signature() != sig_) throw signature_error("superfunction not on this chart");
}

std::string Chart::format(const Superfunction& f) const {
  return to_string(f, even_names_, odd_names_);
}

bool operator==(const Chart& a, const Chart& b) {
  if (a.coords_.size() != b.coords_.size()) return false;
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_[i].name != b.coords_[i].name || a.coords_[i].parity != b.coords_[i].parity) {
      return false;
    }
  }
  return true;
}

}  // namespace superfed
