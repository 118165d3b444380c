#include "entcol/record_codec.hpp"

#include <algorithm>

namespace entcol {

BigInt theta_range(std::size_t length, std::uint32_t base) {
  BigInt r = 1;
  for (std::size_t i = 0; i < length; ++i) r *= base;
  return r;
}

BigInt theta_encode(std::span<const std::uint32_t> word, std::uint32_t base) {
  BigInt ell = 0;
  for (std::size_t i = word.size(); i-- > 0;) {
    if (word[i] < 1 || word[i] > base)
      throw CodecError("digit " + std::to_string(word[i]) + " outside 1.." + std::to_string(base));
    ell = ell * base + (word[i] - 1);
  }
  return ell + 1;
}

std::vector<std::uint32_t> theta_decode(const BigInt& ell, std::size_t length, std::uint32_t base) {
  if (ell < 1 || ell > theta_range(length, base))
    throw CodecError("cycle index " + ell.str() + " out of range for " + std::to_string(length) +
                     " digits in base " + std::to_string(base));
  std::vector<std::uint32_t> word(length);
  BigInt rest = ell - 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (base == 1) {
      word[i] = 1;
      continue;
    }
    word[i] = static_cast<std::uint32_t>(rest % base) + 1;
    rest /= base;
  }
  return word;
}

namespace {

std::uint32_t alphabet(std::size_t delta) {
  if (delta < 2) throw CodecError("conflict entries need max degree >= 2");
  return static_cast<std::uint32_t>(delta - 1);
}

}  // namespace

RecordWord expand_record(const Record& record, std::size_t delta) {
  RecordWord out;
  out.reserve(record.size());
  for (const auto& entry : record) {
    out.push_back(0);
    if (!entry) continue;
    if (entry->k < 3) throw CodecError("conflict with k=" + std::to_string(entry->k) + " (cycles have length >= 6)");
    const auto digits = theta_decode(entry->ell, 2 * entry->k - 2, alphabet(delta));
    out.insert(out.end(), digits.begin(), digits.end());
  }
  return out;
}

Record parse_record_word(const RecordWord& word, std::size_t delta) {
  Record out;
  std::size_t i = 0;
  while (i < word.size()) {
    if (word[i] != 0) throw CodecError("record word must start each entry with 0 (offset " + std::to_string(i) + ")");
    std::size_t j = i + 1;
    while (j < word.size() && word[j] != 0) ++j;
    const std::size_t len = j - i - 1;
    if (len == 0) {
      out.emplace_back();
    } else {
      if (len % 2 != 0 || len < 4)
        throw CodecError("entry at offset " + std::to_string(i) + " has " + std::to_string(len) + " digits");
      std::span<const std::uint32_t> digits(word.data() + i + 1, len);
      out.push_back(CycleConflict{static_cast<std::uint32_t>(len / 2 + 1), theta_encode(digits, alphabet(delta))});
    }
    i = j;
  }
  return out;
}

DyckWord to_dyck(const RecordWord& word) {
  DyckWord out(word.size(), '0');
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i] != 0) out[i] = '1';
  return out;
}

DyckWord dyck_from_uncolor_counts(std::span<const std::uint32_t> counts) {
  DyckWord out;
  for (auto c : counts) {
    out += '0';
    out.append(c, '1');
  }
  return out;
}

long long imbalance(const DyckWord& w) {
  long long h = 0;
  for (char c : w) h += c == '0' ? 1 : -1;
  return h;
}

bool is_partial_dyck(const DyckWord& w) {
  long long h = 0;
  for (char c : w) {
    if (c != '0' && c != '1') return false;
    h += c == '0' ? 1 : -1;
    if (h < 0) return false;
  }
  return true;
}

bool is_full_dyck(const DyckWord& w) { return is_partial_dyck(w) && imbalance(w) == 0; }

std::vector<std::size_t> descent_lengths(const DyckWord& w) {
  std::vector<std::size_t> out;
  std::size_t run = 0;
  for (char c : w) {
    if (c == '1') {
      ++run;
    } else if (run) {
      out.push_back(run);
      run = 0;
    }
  }
  if (run) out.push_back(run);
  return out;
}

DescentReport check_descents(const DyckWord& w, std::uint32_t girth_param) {
  const std::size_t minimum = std::max<std::size_t>(4, 2 * static_cast<std::size_t>(girth_param));
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] != '1') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < w.size() && w[j] == '1') ++j;
    const std::size_t len = j - i;
    if (len % 2 != 0) return {false, i, len, "odd descent"};
    if (len < minimum) return {false, i, len, "descent shorter than " + std::to_string(minimum)};
    i = j;
  }
  return {};
}

DyckWord pad_to_full(const DyckWord& w, const DescentSet& e) {
  if (!is_partial_dyck(w)) throw CodecError("pad_to_full needs a partial Dyck word");
  const auto r = static_cast<std::size_t>(imbalance(w));
  const std::size_t s = e.min_non_unit();
  DyckWord out = w;
  out.reserve(w.size() + r * (2 * s - 1));
  for (std::size_t i = 0; i < r; ++i) {
    out.append(s - 1, '0');
    out.append(s, '1');
  }
  return out;
}

namespace {

void append_symbol(std::string& out, std::uint32_t x) {
  if (x < 10) {
    out += static_cast<char>('0' + x);
  } else {
    out += '(' + std::to_string(x) + ')';
  }
}

}  // namespace

std::string format_word(const RecordWord& word) {
  std::string out;
  for (auto x : word) append_symbol(out, x);
  return out;
}

std::string format_entries(const Record& record, std::size_t delta) {
  std::string out;
  for (std::size_t i = 0; i < record.size(); ++i) {
    if (i) out += '|';
    out += format_word(expand_record(Record{record[i]}, delta));
  }
  return out;
}

}  // namespace entcol
