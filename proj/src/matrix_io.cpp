#include "mild4/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace mild4 {

QuadraticPresentation load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);

  std::vector<std::string> data_lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string first;
    if (probe >> first) data_lines.push_back(line);
  }
  if (data_lines.empty()) throw std::runtime_error(path + ": empty matrix file");

  std::istringstream head(data_lines[0]);
  std::string tag;
  long pval = 0;
  if (!(head >> tag >> pval) || tag != "p")
    throw std::runtime_error(path + ": first line must be 'p <modulus>'");
  std::string extra;
  if (head >> extra) throw std::runtime_error(path + ": trailing junk on the modulus line");
  if (pval < 3) throw std::runtime_error(path + ": modulus must be an odd prime >= 3");
  FieldCtx F(static_cast<std::uint32_t>(pval));

  if (data_lines.size() != 5)
    throw std::runtime_error(path + ": expected exactly 4 relator rows, got " +
                             std::to_string(data_lines.size() - 1));
  Mat rel(4, 6);
  for (int r = 0; r < 4; ++r) {
    std::istringstream row(data_lines[static_cast<std::size_t>(r) + 1]);
    for (int c = 0; c < 6; ++c) {
      long v = 0;
      if (!(row >> v))
        throw std::runtime_error(path + ": row " + std::to_string(r + 1) +
                                 " needs 6 integers");
      rel.at(r, c) = F.reduce(v);
    }
    long junk = 0;
    if (row >> junk)
      throw std::runtime_error(path + ": row " + std::to_string(r + 1) +
                               " has more than 6 entries");
  }
  return QuadraticPresentation{F, std::move(rel)};
}

}  // namespace mild4
