#include <gtest/gtest.h>

#include <cstdio>

#include "rea/io.hpp"

using namespace rea;

namespace {

TEST(IO, MatrixRoundTrip) {
  for (const auto& s : {dj_symmetry(2), flip(3), superflip(1, 1)}) {
    io::Json j = io::to_json(s.psi());
    EXPECT_EQ(io::tensor_from_json(j), s.psi());
    EXPECT_EQ(j["entries"].size(), s.psi().nonzero_count());
  }
}

TEST(IO, MatrixFormat) {
  io::Json j = io::to_json(dj_symmetry(1).R());
  EXPECT_EQ(j.dump(), R"({"dim_v":1,"arity":2,"entries":[[0,0,"q"]]})");
}

TEST(IO, SymmetryRoundTripRevalidates) {
  Symmetry s = dj_symmetry(2);
  io::Json j = io::to_json(s);
  EXPECT_EQ(j["kind"], "hecke");
  EXPECT_EQ(j["dim_v"], 2);
  Symmetry back = io::symmetry_from_json(j);
  EXPECT_EQ(back.R(), s.R());
  EXPECT_EQ(back.C(), s.C());

  // R = identity is not a Hecke symmetry
  io::Json bad = io::to_json(TensorOp::identity(2, 2));
  bad["kind"] = "hecke";
  EXPECT_THROW(io::symmetry_from_json(bad), AxiomViolation);
}

TEST(IO, MalformedInput) {
  EXPECT_THROW(io::tensor_from_json(io::Json::parse(R"({"dim_v":2})")), InputError);
  EXPECT_THROW(io::tensor_from_json(io::Json::parse(R"({"dim_v":1,"arity":1,"entries":[[0,3,"1"]]})")),
               IndexOutOfRange);
  EXPECT_THROW(io::tensor_from_json(io::Json::parse(R"({"dim_v":1,"arity":1,"entries":[[0,0,"q+"]]})")),
               ParseError);
  EXPECT_THROW(io::symmetry_from_json(io::Json::parse(R"({"kind":"braided","dim_v":1,"arity":2,"entries":[]})")),
               InputError);
}

TEST(IO, FileRoundTrip) {
  const std::string path = ::testing::TempDir() + "rea_io_sym.json";
  io::save_json(io::to_json(superflip(1, 1)), path);
  Symmetry s = io::load_symmetry(path);
  EXPECT_EQ(s.R(), superflip(1, 1).R());
  EXPECT_FALSE(s.is_hecke());
  std::remove(path.c_str());
  EXPECT_THROW(io::load_symmetry(path), InputError);
}

TEST(IO, PolynomialJson) {
  MPoly p = powersum_sym(1, 2);
  io::Json j = io::to_json(p, eigen_names(2));
  EXPECT_EQ(j["vars"], io::Json::array({"mu1", "mu2"}));
  EXPECT_EQ(j["terms"].size(), p.terms().size());
  EXPECT_EQ(j["text"], p.to_string(eigen_names(2)));
}

}  // namespace
