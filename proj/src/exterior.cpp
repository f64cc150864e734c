#include "mild4/exterior.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mild4 {

int pair_index(int i, int j) {
  for (int k = 0; k < 6; ++k)
    if (kPairs[k][0] == i && kPairs[k][1] == j) return k;
  throw std::invalid_argument("pair_index: bad pair");
}

static void check_index(int i) {
  if (i < 1 || i > 4) throw std::invalid_argument("generator index out of range");
}

GenToken GenToken::add_col(int i, int j, Fe a) {
  check_index(i);
  check_index(j);
  if (i == j) throw std::invalid_argument("AddCol needs i != j");
  return GenToken{TokKind::AddCol, i, j, a};
}

GenToken GenToken::swap_col(int i, int j) {
  check_index(i);
  check_index(j);
  if (i == j) throw std::invalid_argument("SwapCol needs i != j");
  return GenToken{TokKind::SwapCol, i, j, 0};
}

GenToken GenToken::scale_col(int i, Fe a) {
  check_index(i);
  if (a == 0) throw std::invalid_argument("ScaleCol needs a != 0");
  return GenToken{TokKind::ScaleCol, i, 0, a};
}

GroupWord GroupWord::inverse(const FieldCtx& F) const {
  GroupWord out;
  out.tokens.reserve(tokens.size());
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    switch (it->kind) {
      case TokKind::AddCol:
        out.tokens.push_back(GenToken{TokKind::AddCol, it->i, it->j, F.neg(it->a)});
        break;
      case TokKind::SwapCol:
        out.tokens.push_back(*it);
        break;
      case TokKind::ScaleCol:
        out.tokens.push_back(GenToken{TokKind::ScaleCol, it->i, 0, F.inv(it->a)});
        break;
    }
  }
  return out;
}

std::string GroupWord::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : tokens) {
    if (!first) os << ' ';
    first = false;
    switch (t.kind) {
      case TokKind::AddCol: os << "A(" << t.i << ',' << t.j << ';' << t.a << ')'; break;
      case TokKind::SwapCol: os << "S(" << t.i << ',' << t.j << ')'; break;
      case TokKind::ScaleCol: os << "C(" << t.i << ';' << t.a << ')'; break;
    }
  }
  return os.str();
}

GroupWord GroupWord::parse(const FieldCtx& F, const std::string& text) {
  GroupWord w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    auto body = [&tok](char head) {
      if (tok.size() < 3 || tok[0] != head || tok[1] != '(' || tok.back() != ')')
        throw std::invalid_argument("bad token: " + tok);
      return tok.substr(2, tok.size() - 3);
    };
    auto to_int = [](const std::string& s) {
      std::size_t pos = 0;
      long v = std::stol(s, &pos);
      if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
      return v;
    };
    if (tok[0] == 'A') {
      std::string b = body('A');
      auto comma = b.find(',');
      auto semi = b.find(';');
      if (comma == std::string::npos || semi == std::string::npos || semi < comma)
        throw std::invalid_argument("bad token: " + tok);
      w.tokens.push_back(GenToken::add_col(
          static_cast<int>(to_int(b.substr(0, comma))),
          static_cast<int>(to_int(b.substr(comma + 1, semi - comma - 1))),
          F.reduce(to_int(b.substr(semi + 1)))));
    } else if (tok[0] == 'S') {
      std::string b = body('S');
      auto comma = b.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("bad token: " + tok);
      w.tokens.push_back(GenToken::swap_col(
          static_cast<int>(to_int(b.substr(0, comma))),
          static_cast<int>(to_int(b.substr(comma + 1)))));
    } else if (tok[0] == 'C') {
      std::string b = body('C');
      auto semi = b.find(';');
      if (semi == std::string::npos) throw std::invalid_argument("bad token: " + tok);
      w.tokens.push_back(GenToken::scale_col(
          static_cast<int>(to_int(b.substr(0, semi))),
          F.reduce(to_int(b.substr(semi + 1)))));
    } else {
      throw std::invalid_argument("bad token: " + tok);
    }
  }
  return w;
}

Mat token_gl4(const FieldCtx& F, const GenToken& t) {
  Mat m = Mat::identity(4);
  switch (t.kind) {
    case TokKind::AddCol:
      m.at(t.i - 1, t.j - 1) = F.reduce(t.a);
      break;
    case TokKind::SwapCol:
      m.at(t.i - 1, t.i - 1) = 0;
      m.at(t.j - 1, t.j - 1) = 0;
      m.at(t.i - 1, t.j - 1) = 1;
      m.at(t.j - 1, t.i - 1) = 1;
      break;
    case TokKind::ScaleCol:
      m.at(t.i - 1, t.i - 1) = F.reduce(t.a);
      break;
  }
  return m;
}

Mat psi(const FieldCtx& F, const Mat& a) {
  if (a.rows != 4 || a.cols != 4)
    throw Error(Errc::BadDimension, "psi expects a 4x4 matrix");
  if (determinant(F, a) == 0)
    throw Error(Errc::SingularMatrix, "psi of a singular matrix");
  Mat out(6, 6);
  for (int row = 0; row < 6; ++row) {
    int r = kPairs[row][0] - 1, s = kPairs[row][1] - 1;
    for (int col = 0; col < 6; ++col) {
      int i = kPairs[col][0] - 1, j = kPairs[col][1] - 1;
      out.at(row, col) =
          F.sub(F.mul(a.at(r, i), a.at(s, j)), F.mul(a.at(s, i), a.at(r, j)));
    }
  }
  return out;
}

Mat token_gl6(const FieldCtx& F, const GenToken& t) { return psi(F, token_gl4(F, t)); }

Mat word_gl6(const FieldCtx& F, const GroupWord& w) {
  Mat m = Mat::identity(6);
  for (const auto& t : w.tokens) m = mat_mul(F, m, token_gl6(F, t));
  return m;
}

Subspace act(const FieldCtx& F, const Subspace& u, const GroupWord& w) {
  return act_matrix(F, u, word_gl6(F, w));
}

Subspace act_matrix(const FieldCtx& F, const Subspace& u, const Mat& m6) {
  return Subspace::from_rows(F, mat_mul(F, u.basis(), m6));
}

Subspace dual_act(const FieldCtx& F, const Subspace& u_perp, const GroupWord& w) {
  Mat m = word_gl6(F, w);
  return act_matrix(F, u_perp, transpose(inverse(F, m)));
}

Fe pluecker_form(const FieldCtx& F, const Vec6& v) {
  Fe q = F.mul(v[0], v[5]);
  q = F.sub(q, F.mul(v[1], v[4]));
  return F.add(q, F.mul(v[2], v[3]));
}

std::vector<Mat> group_generators_gl6(const FieldCtx& F) {
  std::vector<Mat> gens;
  std::uint32_t p = F.p();
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      for (Fe a = 1; a < p; ++a)
        gens.push_back(token_gl6(F, GenToken::add_col(i, j, a)));
    }
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      gens.push_back(token_gl6(F, GenToken::swap_col(i, j)));
  // a = 1 scalings are the identity and add nothing to the closure
  for (int i = 1; i <= 4; ++i)
    for (Fe a = 2; a < p; ++a)
      gens.push_back(token_gl6(F, GenToken::scale_col(i, a)));
  return gens;
}

}  // namespace mild4
