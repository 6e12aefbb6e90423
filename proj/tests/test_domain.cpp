#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "symb/domain.hpp"

using namespace symb;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Domain, NormalizeSorts) {
  EXPECT_EQ(normalize({3.0, 1.0, 2.0}), (std::vector<double>{1, 2, 3}));
  Ellipsoid e{4.0, 1.0};
  EXPECT_EQ(e.smallest(), 1.0);
  EXPECT_EQ(e.largest(), 4.0);
}

TEST(Domain, NormalizeRejectsBadEntries) {
  EXPECT_EQ(kind_of([] { normalize({1.0, 0.0}); }), ErrorKind::NonPositiveEntry);
  EXPECT_EQ(kind_of([] { normalize({-1.0}); }), ErrorKind::NonPositiveEntry);
  EXPECT_EQ(kind_of([] { normalize({std::nan("")}); }), ErrorKind::NonPositiveEntry);
  EXPECT_EQ(kind_of([] { normalize(std::vector<double>{}); }), ErrorKind::InvalidArgument);
}

TEST(Domain, Volumes) {
  EXPECT_DOUBLE_EQ(volume(Ellipsoid{1, 4}), 2.0);
  EXPECT_DOUBLE_EQ(volume(Polydisc{1, 4}), 4.0);
  EXPECT_DOUBLE_EQ(volume(Ellipsoid{2, 3, 4}), 4.0);
  EXPECT_DOUBLE_EQ(volume(TargetFamily::ball(2), 2.0), 2.0);
  EXPECT_DOUBLE_EQ(volume(TargetFamily::cube(3), 2.0), 8.0);
  EXPECT_EQ(Ellipsoid::thin(5.0, 3), (Ellipsoid{1, 1, 5}));
}

TEST(Domain, AccuracyValidates) {
  EXPECT_EQ(kind_of([] { Accuracy(0.0); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { Accuracy(1e-6, 0); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(Accuracy().acc, 1e-9);
}

TEST(Domain, BoundChecksCertificate) {
  EXPECT_EQ(kind_of([] { Bound(1.0, Direction::Upper, Method::MultiFold); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { Bound(0.0, Direction::Upper, Method::Inclusion); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { Bound(1.0, Direction::Lower, Method::Volume, IndexCertificate{2}); }),
            ErrorKind::InvalidArgument);
}

TEST(Domain, BoundDescribe) {
  EXPECT_EQ(Bound(2, Direction::Lower, Method::EkelandHofer, IndexCertificate{2}).describe(), "EkelandHofer[k=2]");
  EXPECT_EQ(Bound(2, Direction::Lower, Method::Volume).describe(), "Volume");
  EXPECT_EQ(Bound(7, Direction::Upper, Method::LagrangianN, KVectorCertificate{{2, 3}}).describe(),
            "LagrangianN[k=2x3]");
  EXPECT_EQ(Bound(3, Direction::Upper, Method::MultiFold, FoldCertificate{2.0, 1}).describe(),
            "MultiFold[u1=2.000000000 N=1]");
}
