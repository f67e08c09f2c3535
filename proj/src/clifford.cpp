#include "lle/clifford.hpp"

#include <fstream>
#include <sstream>

#include "lle/exactla.hpp"
#include "lle/operator_io.hpp"

namespace lle {

namespace {

Mat4 from_entries(const std::array<std::array<Scalar, 4>, 4>& e) {
  Mat4 m = mat_zero();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = e[r][c];
  return m;
}

Mat4 pauli_block(int j, bool upper_plus) {
  // [[0, sigma_j], [-sigma_j, 0]], or with both blocks positive for gamma0
  // of the chiral representation when j == 0 (sigma_0 = identity).
  const Scalar o = Scalar(0), l = Scalar(1), i = Scalar::i();
  std::array<std::array<Scalar, 2>, 2> sigma;
  switch (j) {
    case 0: sigma = {{{l, o}, {o, l}}}; break;
    case 1: sigma = {{{o, l}, {l, o}}}; break;
    case 2: sigma = {{{o, -i}, {i, o}}}; break;
    default: sigma = {{{l, o}, {o, -l}}}; break;
  }
  Mat4 m = mat_zero();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      m(r, c + 2) = sigma[r][c];
      m(r + 2, c) = upper_plus ? sigma[r][c] : -sigma[r][c];
    }
  return m;
}

}  // namespace

GammaRep GammaRep::dirac() {
  const Scalar o = Scalar(0), l = Scalar(1);
  GammaRep rep;
  rep.gamma_[0] = from_entries({{{l, o, o, o}, {o, l, o, o}, {o, o, -l, o}, {o, o, o, -l}}});
  for (int j = 1; j <= 3; ++j) rep.gamma_[j] = pauli_block(j, false);
  rep.finish("dirac");
  return rep;
}

GammaRep GammaRep::chiral() {
  GammaRep rep;
  rep.gamma_[0] = pauli_block(0, true);
  for (int j = 1; j <= 3; ++j) rep.gamma_[j] = pauli_block(j, false);
  rep.finish("chiral");
  return rep;
}

GammaRep GammaRep::from_matrices(std::array<Mat4, 4> gammas, std::string name) {
  GammaRep rep;
  rep.gamma_ = std::move(gammas);
  rep.finish(std::move(name));
  return rep;
}

GammaRep GammaRep::from_text(const std::string& text) {
  std::istringstream in(text);
  std::array<Mat4, 4> gammas;
  std::string line;
  int matrix = 0, row = 0;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) continue;
    if (matrix >= 4) throw std::invalid_argument("gamma file: more than 16 matrix rows");
    std::array<std::array<Scalar, 4>, 4> entries{};
    std::size_t pos = 0;
    for (int c = 0; c < 4; ++c) {
      auto comma = c < 3 ? line.find(',', pos) : line.size();
      if (comma == std::string::npos)
        throw std::invalid_argument("gamma file: expected 4 comma-separated entries per row");
      entries[row][c] = parse_scalar(line.substr(pos, comma - pos));
      pos = comma + 1;
    }
    if (row == 0) gammas[matrix] = mat_zero();
    for (int c = 0; c < 4; ++c) gammas[matrix](row, c) = entries[row][c];
    if (++row == 4) {
      row = 0;
      ++matrix;
    }
  }
  if (matrix != 4 || row != 0)
    throw std::invalid_argument("gamma file: expected four 4x4 blocks");
  return from_matrices(std::move(gammas));
}

GammaRep GammaRep::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open gamma file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

GammaRep GammaRep::named(const std::string& name) {
  if (name == "dirac") return dirac();
  if (name == "chiral") return chiral();
  return from_file(name);
}

void GammaRep::finish(std::string name) {
  name_ = std::move(name);
  const Mat4 id = mat_identity();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu; nu < 4; ++nu) {
      Mat4 anti = mat_mul_sparse(gamma_[mu], gamma_[nu]) + mat_mul_sparse(gamma_[nu], gamma_[mu]);
      Mat4 expected = Scalar(2 * metric(mu, nu)) * id;
      if (!exact_equal(anti, expected)) throw CliffordViolation(mu, nu);
    }
  }
  gamma4_ = mat_mul_sparse(mat_mul_sparse(gamma_[0], gamma_[1]), mat_mul_sparse(gamma_[2], gamma_[3]));
  const Scalar half = Scalar(make_rational(1, 2));
  alpha_ = half * (gamma_[0] + gamma4_);
  beta_ = half * (gamma_[0] - gamma4_);

  int k = 0;
  auto put = [&](const Mat4& m, std::string bname) {
    basis_[k] = m;
    basis_names_[k] = std::move(bname);
    ++k;
  };
  put(id, "");
  for (int mu = 0; mu < 4; ++mu) put(gamma_[mu], "g" + std::to_string(mu));
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      put(mat_mul_sparse(gamma_[mu], gamma_[nu]), "g" + std::to_string(mu) + "*g" + std::to_string(nu));
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      for (int rho = nu + 1; rho < 4; ++rho)
        put(mat_mul_sparse(mat_mul_sparse(gamma_[mu], gamma_[nu]), gamma_[rho]),
            "g" + std::to_string(mu) + "*g" + std::to_string(nu) + "*g" + std::to_string(rho));
  put(gamma4_, "g4");

  KMatrix b(16, 16);
  for (int col = 0; col < 16; ++col)
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) b(r * 4 + c, col) = basis_[col](r, c);
  KMatrix aug(16, 32);
  aug.leftCols(16) = b;
  aug.rightCols(16) = KMatrix::Constant(16, 16, Scalar(0));
  for (int d = 0; d < 16; ++d) aug(d, 16 + d) = Scalar(1);
  RrefResult red = rref(std::move(aug));
  if (red.rank != 16)
    throw std::runtime_error("gamma product basis unexpectedly degenerate");
  basis_inverse_ = red.mat.rightCols(16);
}

std::array<Scalar, 16> GammaRep::decompose(const Mat4& m) const {
  std::array<Scalar, 16> out;
  for (int k = 0; k < 16; ++k) {
    Scalar acc(0);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        const Scalar& v = m(r, c);
        if (!v.is_zero()) acc += basis_inverse_(k, r * 4 + c) * v;
      }
    out[k] = std::move(acc);
  }
  return out;
}

std::vector<IdentityCheck> derived_identities(const GammaRep& rep) {
  const Mat4 zero = mat_zero(), id = mat_identity();
  std::vector<IdentityCheck> out;
  auto check = [&out](std::string name, const Mat4& got, const Mat4& expected) {
    out.push_back({std::move(name), exact_equal(got, expected)});
  };
  check("alpha^2 = 0", mat_mul_sparse(rep.alpha(), rep.alpha()), zero);
  check("beta^2 = 0", mat_mul_sparse(rep.beta(), rep.beta()), zero);
  check("{alpha, beta} = 1",
        mat_mul_sparse(rep.alpha(), rep.beta()) + mat_mul_sparse(rep.beta(), rep.alpha()), id);
  check("gamma4^2 = -1", mat_mul_sparse(rep.gamma4(), rep.gamma4()), Mat4(-id));
  check("{gamma0, gamma4} = 0",
        mat_mul_sparse(rep.gamma(0), rep.gamma4()) + mat_mul_sparse(rep.gamma4(), rep.gamma(0)),
        zero);
  for (int j = 1; j <= 3; ++j) {
    check("{alpha, gamma" + std::to_string(j) + "} = 0",
          mat_mul_sparse(rep.alpha(), rep.gamma(j)) + mat_mul_sparse(rep.gamma(j), rep.alpha()),
          zero);
    check("{beta, gamma" + std::to_string(j) + "} = 0",
          mat_mul_sparse(rep.beta(), rep.gamma(j)) + mat_mul_sparse(rep.gamma(j), rep.beta()),
          zero);
  }
  return out;
}

}  // namespace lle
