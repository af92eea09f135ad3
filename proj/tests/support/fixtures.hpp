#ifndef BCKCODE_TESTS_FIXTURES_HPP
#define BCKCODE_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "bckcode/code.hpp"
#include "bckcode/io.hpp"
#include "bckcode/table.hpp"
#include "oracles.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(BCKCODE_TEST_DATA_DIR) + "/" + name; }

inline bck::BlockCode code(const std::string& name) { return bck::parse_code_file(bck::read_file(data_path(name))); }

inline bck::TableFile table_file(const std::string& name) {
  return bck::parse_table_file(bck::read_file(data_path(name)));
}

inline bck::CayleyTable table(const std::string& name) { return table_file(name).table; }

inline oracle::Grid to_grid(const bck::CayleyTable& t) {
  oracle::Grid g(t.size(), std::vector<int>(t.size()));
  for (bck::Element x = 0; x < t.size(); ++x)
    for (bck::Element y = 0; y < t.size(); ++y) g[x][y] = static_cast<int>(t(x, y));
  return g;
}

inline bck::CayleyTable from_grid(const oracle::Grid& g) {
  std::vector<std::vector<bck::Element>> rows;
  for (const auto& row : g) rows.emplace_back(row.begin(), row.end());
  return bck::CayleyTable::from_rows(rows);
}

inline bck::BlockCode from_random(const oracle::RandomCode& rc) {
  std::vector<bck::Codeword> words;
  for (const auto& w : rc.words) words.emplace_back(std::vector<bck::Symbol>(w.begin(), w.end()));
  return bck::BlockCode(bck::Alphabet(rc.n), rc.q, std::move(words));
}

inline bck::BlockCode make_code(std::size_t n, const std::vector<std::string>& words) {
  std::vector<bck::Codeword> parsed;
  for (const auto& w : words) parsed.push_back(bck::parse_codeword(w));
  return bck::BlockCode(bck::Alphabet(n), std::move(parsed));
}

}  // namespace fixtures

#endif  // BCKCODE_TESTS_FIXTURES_HPP
