#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

#include "kleinjet/catalog.hpp"
#include "kleinjet/errors.hpp"
#include "kleinjet/io.hpp"
#include "kleinjet/jetfilt.hpp"
#include "kleinjet/klein.hpp"
#include "support.hpp"

using namespace kleinjet;
using kleinjet::io::Json;
using kleinjet::io::Location;
using kleinjet::testing::vec;

namespace {

const Location kLoc{"test.json", ""};

std::string error_of(const auto& call) {
  try {
    call();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("kleinjet_io_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  [[nodiscard]] std::filesystem::path write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p;
  }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Io, RationalsAreCanonicalStrings) {
  EXPECT_EQ(io::to_json(Rational(-6, 4)), Json("-3/2"));
  EXPECT_EQ(io::rational_from_json(Json("2/4"), kLoc), Rational(1, 2));
  EXPECT_EQ(io::rational_from_json(Json(7), kLoc), Rational(7));
  EXPECT_THROW(io::rational_from_json(Json("1/0"), kLoc), InputError);
  EXPECT_THROW(io::rational_from_json(Json(1.5), kLoc), InputError);
}

TEST(Io, SubspaceRoundTripIsCanonical) {
  const Subspace s = span({vec({2, 4, 0}), vec({0, 3, 3})}, 3);
  const Json j = io::to_json(s);
  EXPECT_EQ(j["ambient_dim"], 3);
  EXPECT_EQ(io::subspace_from_json(j, kLoc), s);
  const Json bare = Json::parse(R"([["1","2","0"],["1","5","3"]])");
  EXPECT_EQ(io::subspace_from_json(bare, kLoc), s);
  EXPECT_THROW(io::subspace_from_json(Json::array(), kLoc), InputError);
  EXPECT_EQ(io::subspace_from_json(Json::parse(R"({"ambient_dim":2,"basis":[]})"), kLoc), Subspace::zero(2));
}

TEST(Io, AlgebraAndRepresentationRoundTrip) {
  const Representation rep = sympower(3);
  const Json j = io::to_json(rep);
  const Representation back = io::load_representation(j, kLoc, ".");
  EXPECT_EQ(back, rep);
  EXPECT_EQ(io::to_json(back), j);
  EXPECT_EQ(io::load_algebra(io::to_json(sl2()), kLoc), sl2());
}

TEST(Io, ErrorsNameThePath) {
  Json j = io::to_json(sympower(2));
  j["matrices"][1][2][0] = "x";
  EXPECT_EQ(error_of([&] { io::load_representation(j, kLoc, "."); }),
            "test.json: /matrices/1/2/0: malformed rational 'x'");
  Json missing = io::to_json(sl2());
  missing.erase("brackets");
  EXPECT_EQ(error_of([&] { io::load_algebra(missing, kLoc); }), "test.json: /brackets: missing field");
  Json bad_index = io::to_json(sl2());
  bad_index["brackets"][0]["i"] = 2;
  EXPECT_NE(error_of([&] { io::load_algebra(bad_index, kLoc); }).find("/brackets/0"), std::string::npos);
}

TEST(Io, InvalidAlgebraCarriesViolations) {
  Json j = io::to_json(sl2());
  // Break [h,e] = 2e by editing the stored [e,h] coefficient.
  for (Json& b : j["brackets"]) {
    if (b["i"] == 0 && b["j"] == 2) b["coeffs"]["0"] = "-3";
  }
  try {
    io::load_algebra(j, kLoc);
    FAIL() << "expected an InvalidObjectError";
  } catch (const io::InvalidObjectError& e) {
    EXPECT_FALSE(e.report().passed);
    EXPECT_NE(std::string(e.what()).find("jacobi at (0,1,2)"), std::string::npos) << e.what();
  }
}

TEST(Io, RepresentationMayReferenceAlgebraFile) {
  const TempDir dir;
  dir.write("sl2.json", io::dump(io::to_json(sl2())));
  Json rep = io::to_json(sympower(2));
  rep["algebra"] = "sl2.json";
  const auto path = dir.write("rep.json", io::dump(rep));
  EXPECT_EQ(io::load_representation_file(path), sympower(2));
}

TEST(Io, MissingFileIsInputError) {
  EXPECT_THROW(io::read_json_file("/nonexistent/kleinjet.json"), InputError);
  const TempDir dir;
  const auto path = dir.write("broken.json", "{ not json");
  EXPECT_THROW(io::read_json_file(path), InputError);
}

TEST(Io, ReportRoundTrips) {
  const Representation rep = sympower(3);
  const GreedyChain chain = greedy_chain(rep, Vector::unit(4, 0));
  const io::FiltrationReport fr = io::make_filtration_report(rep, chain);
  const Json fj = io::to_json(fr);
  EXPECT_EQ(io::to_json(io::filtration_report_from_json(fj, kLoc)), fj);

  const Json sj = io::to_json(jet_order_search(rep, BasisStrategy{}));
  EXPECT_EQ(io::to_json(io::jet_search_from_json(sj, kLoc)), sj);

  const KleinPair pair = build_klein_pair(rep, chain.filtration, AbelianOption{});
  const Json kj = io::to_json(io::make_klein_report(pair.h(), pair.h0(), Json::object()));
  EXPECT_EQ(kj["ord"], 3);
  EXPECT_EQ(io::to_json(io::klein_report_from_json(kj, kLoc)), kj);

  const Json famj = io::to_json(verify_family(3));
  EXPECT_EQ(io::to_json(io::family_report_from_json(famj, kLoc)), famj);

  const Json vj = io::to_json(validate_lie(sl2()));
  EXPECT_EQ(io::to_json(io::validation_report_from_json(vj, kLoc)), vj);

  const Json stj = io::to_json(is_stiffening(sl2(), Subspace::full(3), Subspace::full(3), Subspace::full(3)));
  EXPECT_EQ(io::to_json(io::stiffening_from_json(stj, kLoc)), stj);
}

TEST(Io, DumpIsStable) {
  const Json j = io::to_json(sympower(2));
  EXPECT_EQ(io::dump(j), io::dump(io::to_json(io::load_representation(j, kLoc, "."))));
  EXPECT_EQ(io::dump(j).back(), '\n');
}
