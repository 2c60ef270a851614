#include <doctest.h>

#include <random>

#include "knotdelta/errors.hpp"
#include "knotdelta/group_element.hpp"

using namespace knotdelta;

TEST_SUITE("group-element") {

TEST_CASE("basic arithmetic") {
    GroupElement v = GroupElement::basis(Letter::X, 0, 2);
    v.add(Letter::Y, 1, 1);
    CHECK(v.coeff(Letter::X, 0) == 2);
    CHECK(v.coeff(Letter::Y, 1) == 1);
    CHECK(v.coeff(Letter::Y, 7) == 0);
    CHECK((v + (-v)).is_zero());
    CHECK((v - v).is_zero());
    CHECK(v * 3 == v + v + v);
    CHECK((v * 0).is_zero());
}

TEST_CASE("zero coefficients are dropped") {
    GroupElement v;
    v.add(Letter::X, 2, 5);
    v.add(Letter::X, 2, -5);
    CHECK(v.is_zero());
    CHECK(v.support_size() == 0);
}

TEST_CASE("addition is commutative and associative on random elements") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        GroupElement a, b, c;
        for (int i = 0; i < 4; ++i) {
            a.add(rng() % 2 ? Letter::X : Letter::Y, static_cast<int>(rng() % 7) - 3,
                  static_cast<int>(rng() % 9) - 4);
            b.add(rng() % 2 ? Letter::X : Letter::Y, static_cast<int>(rng() % 7) - 3,
                  static_cast<int>(rng() % 9) - 4);
            c.add(rng() % 2 ? Letter::X : Letter::Y, static_cast<int>(rng() % 7) - 3,
                  static_cast<int>(rng() % 9) - 4);
        }
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("text form") {
    GroupElement v;
    v.add(Letter::Y, 0, 4);
    v.add(Letter::X, -1, 3);
    CHECK(v.to_text() == "4Y_0 + 3X_-1");
    CHECK(GroupElement{}.to_text() == "0");
    CHECK(GroupElement::basis(Letter::X, 1, -1).to_text() == "-X_1");

    GroupElement w;
    w.add(Letter::X, 0, 2);
    w.add(Letter::Y, 1, 1);
    w.add(Letter::Y, 0, -2);
    w.add(Letter::X, -1, -1);
    CHECK(GroupElement::from_text("2X_0 + Y_1 - 2Y_0 - X_-1") == w);
    CHECK(GroupElement::from_text(w.to_text()) == w);
    CHECK(GroupElement::from_text("0").is_zero());
    CHECK(GroupElement::from_text("X_0 - X_0").is_zero());
}

TEST_CASE("text parse errors") {
    CHECK_THROWS_AS(GroupElement::from_text(""), parse_error);
    CHECK_THROWS_AS(GroupElement::from_text("2Z_0"), parse_error);
    CHECK_THROWS_AS(GroupElement::from_text("X0"), parse_error);
    CHECK_THROWS_AS(GroupElement::from_text("X_"), parse_error);
    CHECK_THROWS_AS(GroupElement::from_text("3 + X_0"), parse_error);
}

TEST_CASE("json form is sorted by letter then index") {
    GroupElement v;
    v.add(Letter::Y, 0, 4);
    v.add(Letter::X, -1, 3);
    nlohmann::json j = v.to_json();
    REQUIRE(j.size() == 2);
    CHECK(j[0][0] == "X");
    CHECK(j[0][1] == -1);
    CHECK(j[0][2] == 3);
    CHECK(j[1][0] == "Y");
    CHECK(GroupElement::from_json(j) == v);
    CHECK_THROWS_AS(GroupElement::from_json(nlohmann::json::parse("[[\"Q\",0,1]]")), parse_error);
}

TEST_CASE("support index range") {
    GroupElement v;
    v.add(Letter::X, -4, 1);
    v.add(Letter::Y, 9, 2);
    CHECK(v.min_index() == -4);
    CHECK(v.max_index() == 9);
}

}  // TEST_SUITE
