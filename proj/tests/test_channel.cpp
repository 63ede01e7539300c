#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracle.hpp"
#include "wptrelay/channel.hpp"

using namespace wptrelay;

TEST_CASE("db_to_linear") {
    CHECK(db_to_linear(0.0) == 1.0);
    CHECK(db_to_linear(10.0) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(db_to_linear(-30.0) == doctest::Approx(0.001).epsilon(1e-15));
}

TEST_CASE("fading_sigma_ln") {
    CHECK(fading_sigma_ln(8.66) == doctest::Approx(8.66 * std::log(10.0) / 10.0).epsilon(1e-15));
    CHECK(fading_sigma_ln(8.66) == doctest::Approx(1.9940387).epsilon(1e-7));
    CHECK(fading_sigma_ln(0.0) == 0.0);
    CHECK(fading_sigma_ln(10.0 / std::log(10.0)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(fading_sigma_ln(-0.1), DomainError);
}

TEST_CASE("path_loss_linear") {
    const ChannelParams los{0.0, 2.5, 8.66};
    CHECK(path_loss_linear(los, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(path_loss_linear(los, 100.0) == doctest::Approx(1e-5).epsilon(1e-12));
    const ChannelParams nlos{-25.0, 5.76, 9.06};
    CHECK(path_loss_linear(nlos, 10.0) ==
          doctest::Approx(std::pow(10.0, -8.26)).epsilon(1e-12));
    CHECK_THROWS_AS(path_loss_linear(los, 0.0), DomainError);
    CHECK_THROWS_AS(path_loss_linear(los, -2.0), DomainError);

    double prev = path_loss_linear(los, 0.5);
    for (double d = 1.0; d < 300.0; d *= 1.7) {
        const double h = path_loss_linear(los, d);
        CHECK(h < prev);
        prev = h;
    }
}

TEST_CASE("required_power") {
    const LinkBudget paper{2079.5, 3.1623e-11, 0.1};
    CHECK(required_power(paper, 1.0) == doctest::Approx(6.576e-8).epsilon(1e-3));
    const LinkBudget unit{1.0, 1.0, 1.0};
    CHECK(required_power(unit, 1.0) == 1.0);
    CHECK(required_power(paper, 2.0) == doctest::Approx(required_power(paper, 1.0) / 2.0));
    CHECK_THROWS_AS(required_power(unit, 0.0), DomainError);

    // required_power(h) * h stays at gamma_th * noise up to round-off.
    for (double h = 1e-12; h < 1e3; h *= 10.0) {
        CHECK(required_power(paper, h) * h ==
              doctest::Approx(paper.gamma_th * paper.noise_power).epsilon(1e-12));
    }
}

TEST_CASE("harvested_power") {
    CHECK(harvested_power(0.0, 1.0, 1e-4, 1e-3) == 0.0);
    CHECK(harvested_power(0.3, 1.0, 1e-4, 1e-3) == doctest::Approx(3e-8).epsilon(1e-12));
    CHECK(harvested_power(0.3, 2.0, 1e-4, 1e-3) ==
          doctest::Approx(2.0 * harvested_power(0.3, 1.0, 1e-4, 1e-3)));
    CHECK_THROWS_AS(harvested_power(1.5, 1.0, 1e-4, 1e-3), DomainError);
    CHECK_THROWS_AS(harvested_power(0.3, -1.0, 1e-4, 1e-3), DomainError);
    CHECK_THROWS_AS(harvested_power(0.3, 1.0, 0.0, 1e-3), DomainError);
}

TEST_CASE("sample_channel with zero fading is the pure path loss") {
    const ChannelParams params{-3.0, 3.1, 0.0};
    RandomStream rng = RandomStream::from_seed(5, 0);
    for (double d : {1.0, 7.5, 42.0}) {
        CHECK(sample_channel(params, d, rng) ==
              doctest::Approx(path_loss_linear(params, d)).epsilon(1e-15));
    }
    CHECK_THROWS_AS(sample_channel(params, 0.0, rng), DomainError);
}

TEST_CASE("sample_channel fading statistics match the dB-domain normal") {
    const ChannelParams params{0.0, 2.5, 8.66};
    const double pl = path_loss_linear(params, 20.0);
    RandomStream rng = RandomStream::from_seed(99, 3);

    const int n = 1000000;
    std::vector<double> fading_db(n);
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double h = sample_channel(params, 20.0, rng);
        const double f_db = 10.0 * std::log10(h / pl);
        fading_db[i] = f_db;
        sum += f_db;
        sumsq += f_db * f_db;
    }
    const double mean = sum / n;
    const double sd = std::sqrt(sumsq / n - mean * mean);
    CHECK(std::fabs(mean) <= 3.0 * 8.66 / 1000.0);
    CHECK(sd == doctest::Approx(8.66).epsilon(0.01));

    const double ks = oracle::ks_distance(
        fading_db, [](double x) { return oracle::hart_normal_cdf(x / 8.66); });
    CHECK(ks < 0.005);
}
