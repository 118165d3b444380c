#include "entcol/descent_set.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace entcol {

DescentSet::DescentSet(std::vector<std::uint32_t> finite, std::optional<Progression> prog)
    : progression_(prog) {
  if (prog) {
    if (prog->start == 0) throw DescentSetError("progression must start at 1 or more");
    if (prog->step == 0) throw DescentSetError("progression step must be positive");
  }
  for (auto x : finite)
    if (x == 0) throw DescentSetError("descent lengths must be >= 1");
  std::sort(finite.begin(), finite.end());
  finite.erase(std::unique(finite.begin(), finite.end()), finite.end());
  for (auto x : finite)
    if (!prog || x < prog->start || (x - prog->start) % prog->step != 0) finite_.push_back(x);
  if (finite_.empty() && !progression_) throw DescentSetError("descent set must be nonempty");
  if (!progression_ && finite_ == std::vector<std::uint32_t>{1}) throw DescentSetError("descent set {1} is not allowed");
}

DescentSet DescentSet::finite(std::vector<std::uint32_t> members) { return DescentSet(std::move(members), std::nullopt); }

DescentSet DescentSet::progression(std::uint32_t start, std::uint32_t step) {
  return DescentSet({}, Progression{start, step});
}

DescentSet DescentSet::join(std::vector<std::uint32_t> members, std::uint32_t start, std::uint32_t step) {
  return DescentSet(std::move(members), Progression{start, step});
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint32_t to_u32(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw DescentSetError("bad number '" + std::string(s) + "' in descent set '" + std::string(whole) + "'");
  return v;
}

}  // namespace

DescentSet DescentSet::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::string_view rest = text;
  while (true) {
    std::size_t cut = std::string_view::npos;
    std::size_t width = 1;
    for (std::string_view sep : {"|", "\xE2\x88\xAA", "U"}) {
      const auto p = rest.find(sep);
      if (p < cut) {
        cut = p;
        width = sep.size();
      }
    }
    if (cut == std::string_view::npos) {
      parts.push_back(rest);
      break;
    }
    parts.push_back(rest.substr(0, cut));
    rest.remove_prefix(cut + width);
  }

  std::vector<std::uint32_t> members;
  std::optional<Progression> prog;
  for (auto part : parts) {
    part = trim(part);
    if (part.empty()) throw DescentSetError("empty component in descent set '" + std::string(text) + "'");
    if (part.front() == '{') {
      if (part.back() != '}') throw DescentSetError("unterminated '{' in '" + std::string(text) + "'");
      std::string_view body = part.substr(1, part.size() - 2);
      while (!trim(body).empty()) {
        const auto comma = body.find(',');
        members.push_back(to_u32(body.substr(0, comma), text));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
      }
      continue;
    }
    const auto n_pos = part.find('N');
    if (n_pos == std::string_view::npos) throw DescentSetError("cannot parse descent set '" + std::string(text) + "'");
    if (prog) throw DescentSetError("at most one progression per descent set");
    const auto head = trim(part.substr(0, n_pos));
    auto tail = trim(part.substr(n_pos + 1));
    const std::uint32_t step = head.empty() ? 1 : to_u32(head, text);
    std::uint32_t start = 0;
    if (!tail.empty()) {
      if (tail.front() != '+') throw DescentSetError("expected '+' after N in '" + std::string(text) + "'");
      start = to_u32(tail.substr(1), text);
    }
    prog = Progression{start, step};
  }
  return DescentSet(std::move(members), prog);
}

bool DescentSet::contains(std::uint64_t x) const {
  if (std::binary_search(finite_.begin(), finite_.end(), x)) return true;
  return progression_ && x >= progression_->start && (x - progression_->start) % progression_->step == 0;
}

std::vector<std::uint32_t> DescentSet::members_up_to(std::uint64_t bound) const {
  std::vector<std::uint32_t> out;
  for (auto x : finite_)
    if (x <= bound) out.push_back(x);
  if (progression_)
    for (std::uint64_t x = progression_->start; x <= bound; x += progression_->step)
      out.push_back(static_cast<std::uint32_t>(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t DescentSet::min_member() const {
  std::uint32_t m = progression_ ? progression_->start : finite_.front();
  if (!finite_.empty()) m = std::min(m, finite_.front());
  return m;
}

std::uint32_t DescentSet::min_non_unit() const {
  std::optional<std::uint32_t> best;
  for (auto x : finite_) {
    if (x != 1) {
      best = x;
      break;
    }
  }
  if (progression_) {
    const auto& p = *progression_;
    const std::uint32_t first = p.start == 1 ? p.start + p.step : p.start;
    best = best ? std::min(*best, first) : first;
  }
  return *best;
}

std::optional<std::uint32_t> DescentSet::max_member() const {
  if (progression_) return std::nullopt;
  return finite_.back();
}

std::uint32_t DescentSet::period() const {
  std::uint32_t g = 0;
  for (auto x : finite_) g = std::gcd(g, x);
  if (progression_) g = std::gcd(std::gcd(g, progression_->start), progression_->step);
  return g;
}

std::string DescentSet::to_string() const {
  std::string out;
  if (!finite_.empty()) {
    out += '{';
    for (std::size_t i = 0; i < finite_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(finite_[i]);
    }
    out += '}';
  }
  if (progression_) {
    if (!out.empty()) out += '|';
    if (progression_->step != 1) out += std::to_string(progression_->step);
    out += 'N';
    if (progression_->start) out += '+' + std::to_string(progression_->start);
  }
  return out;
}

}  // namespace entcol
