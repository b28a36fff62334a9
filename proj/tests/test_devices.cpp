#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "roadmsim/devices.hpp"

using namespace roadmsim;

namespace {

const Band kBandC{"C", 191.30, 196.10};
const Band kBandL{"L", 186.05, 190.85};

WssSpec multiband_wss() {
  return {"wss-1x9-cl", 9, {kBandC, kBandL}, 5.1, 6.7, 5.5, 6.1};
}

McsSpec aggregator_mcs() {
  return {"mcs-16x8-cl", 16, 8, 2.5, 45.0, 0.0, {kBandC, kBandL}};
}

}  // namespace

TEST_CASE("wss spec validation and band support") {
  const WssSpec wss = multiband_wss();
  CHECK_NOTHROW(wss.validate());
  CHECK(wss.supports(193.1));
  CHECK(wss.supports(188.0));
  CHECK_FALSE(wss.supports(191.0));  // guard band between L and C
  CHECK(wss.supports_band("C"));
  CHECK(wss.supports_band("L"));
  CHECK_FALSE(wss.supports_band("S"));

  WssSpec inverted = wss;
  inverted.loss_min_db = 7.0;
  CHECK_THROWS_AS(inverted.validate(), Error);
  WssSpec no_ports = wss;
  no_ports.port_count = 0;
  CHECK_THROWS_AS(no_ports.validate(), Error);
  WssSpec avg_outside = wss;
  avg_outside.loss_avg_high_db = 6.8;
  CHECK_THROWS_AS(avg_outside.validate(), Error);
}

TEST_CASE("wss sampled losses stay in range with the mean in the average band") {
  const WssSpec wss = multiband_wss();
  std::mt19937_64 pick(7);
  std::uniform_real_distribution<double> c_freq(kBandC.low_edge_thz, kBandC.high_edge_thz);
  std::uniform_real_distribution<double> l_freq(kBandL.low_edge_thz, kBandL.high_edge_thz);

  double total = 0.0;
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    const int port = static_cast<int>(pick() % 9);
    const double freq = (i % 2 == 0) ? c_freq(pick) : l_freq(pick);
    const double loss = wss_insertion_loss(wss, port, freq, 1);
    CHECK(loss >= 5.1);
    CHECK(loss <= 6.7);
    total += loss;
  }
  const double mean = total / samples;
  CHECK(mean >= 5.5);
  CHECK(mean <= 6.1);
}

TEST_CASE("wss loss is deterministic in (port, frequency, seed)") {
  const WssSpec wss = multiband_wss();
  const double a = wss_insertion_loss(wss, 3, 193.125, 1);
  CHECK(wss_insertion_loss(wss, 3, 193.125, 1) == a);
  CHECK(wss_insertion_loss(wss, 4, 193.125, 1) != a);
  CHECK(wss_insertion_loss(wss, 3, 193.175, 1) != a);
  CHECK(wss_insertion_loss(wss, 3, 193.125, 2) != a);
  CHECK_THROWS_AS(wss_insertion_loss(wss, 9, 193.125, 1), Error);
  CHECK_THROWS_AS(wss_insertion_loss(wss, -1, 193.125, 1), Error);
  CHECK_THROWS_AS(wss_insertion_loss(wss, 0, 191.0, 1), Error);  // guard band
}

TEST_CASE("mcs intrinsic loss is the client split") {
  for (int clients : {4, 8, 12, 16, 24}) {
    McsSpec mcs = aggregator_mcs();
    mcs.client_ports = clients;
    CHECK(mcs.intrinsic_loss_db() ==
          doctest::Approx(10.0 * std::log10(clients)).epsilon(1e-12));
  }
  const McsSpec mcs = aggregator_mcs();
  CHECK(mcs.intrinsic_loss_db() == doctest::Approx(9.0309).epsilon(1e-4));
  // Published figure: about 11.5 dB total for the 16x8 aggregator.
  CHECK(std::abs(mcs_insertion_loss(mcs) - 11.53) < 0.005);
  CHECK(std::abs(mcs_insertion_loss(mcs) - 11.5) < 0.05);
}

TEST_CASE("mcs validation") {
  CHECK_NOTHROW(aggregator_mcs().validate());
  McsSpec no_clients = aggregator_mcs();
  no_clients.client_ports = 0;
  CHECK_THROWS_AS(no_clients.validate(), Error);
  McsSpec negative_iso = aggregator_mcs();
  negative_iso.min_cumulative_isolation_db = -1.0;
  CHECK_THROWS_AS(negative_iso.validate(), Error);
}

TEST_CASE("cumulative isolation never drops below the spec minimum") {
  McsSpec flat = aggregator_mcs();
  McsSpec rippled = aggregator_mcs();
  rippled.isolation_ripple_db = 3.0;
  for (const Band& band : {kBandC, kBandL}) {
    for (int i = 0; i < 100; ++i) {
      const double freq =
          band.low_edge_thz + (i + 0.5) * (band.high_edge_thz - band.low_edge_thz) / 100.0;
      CHECK(mcs_cumulative_isolation(flat, freq) == 45.0);
      const double iso = mcs_cumulative_isolation(rippled, freq);
      CHECK(iso >= 45.0);
      CHECK(iso <= 48.0 + 1e-12);
    }
  }
  CHECK_THROWS_AS(mcs_cumulative_isolation(flat, 191.0), Error);
}

TEST_CASE("edfa applies gain, clamps at max output, rejects the wrong band") {
  const EdfaSpec edfa{"edfa-c", "C", 20.0, 23.0};
  CHECK(edfa_apply(edfa, -15.5, "C") == doctest::Approx(4.5).epsilon(1e-12));
  CHECK(edfa_apply(edfa, 10.0, "C") == 23.0);  // clamp
  CHECK_THROWS_AS(edfa_apply(edfa, 0.0, "L"), Error);
  try {
    edfa_apply(edfa, 0.0, "L");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::band_unsupported);
  }
}

TEST_CASE("wss switching state semantics") {
  WssState wss(9);
  wss.route(2, 100);
  CHECK(wss.port_for(100) == 2);
  CHECK_FALSE(wss.channel_free(100));
  CHECK(wss.routed_count() == 1);

  // Re-routing the same channel to the same port is idempotent.
  CHECK_NOTHROW(wss.route(2, 100));
  // Strict remap to a different port is contention.
  CHECK_THROWS_AS(wss.route(3, 100), Error);
  try {
    wss.route(3, 100);
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::contention);
  }
  // Replace policy moves the route.
  wss.route(3, 100, RoutePolicy::replace);
  CHECK(wss.port_for(100) == 3);

  wss.unroute(100);
  CHECK(wss.channel_free(100));
  CHECK(wss.routed_count() == 0);
  CHECK_NOTHROW(wss.unroute(100));  // releasing twice is harmless
  CHECK_THROWS_AS(wss.route(9, 5), Error);
  CHECK_THROWS_AS(wss.route(-1, 5), Error);
}

TEST_CASE("mcs switching state semantics") {
  McsState mcs(8, 16);
  mcs.connect(0, 11);
  CHECK(mcs.degree_for(0) == 11);
  CHECK_FALSE(mcs.client_free(0));
  // A connected client rejects any further connect, same degree included.
  CHECK_THROWS_AS(mcs.connect(0, 11), Error);
  CHECK_THROWS_AS(mcs.connect(0, 12), Error);
  try {
    mcs.connect(0, 12);
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::client_busy);
  }
  // Contentionless fabric: another client may face the same degree.
  CHECK_NOTHROW(mcs.connect(1, 11));
  mcs.disconnect(0);
  CHECK(mcs.client_free(0));
  CHECK_NOTHROW(mcs.disconnect(0));  // releasing twice is harmless
  CHECK_THROWS_AS(mcs.connect(8, 0), Error);
  CHECK_THROWS_AS(mcs.connect(0, 16), Error);
}

TEST_CASE("random switching sequences agree with a plain map model") {
  std::mt19937_64 rng(2026);
  WssState wss(9);
  std::map<int, int> wss_model;
  for (int i = 0; i < 20000; ++i) {
    const int channel = static_cast<int>(rng() % 32);
    const int port = static_cast<int>(rng() % 9);
    switch (rng() % 3) {
      case 0: {
        const auto it = wss_model.find(channel);
        if (it == wss_model.end() || it->second == port) {
          wss.route(port, channel);
          wss_model[channel] = port;
        } else {
          CHECK_THROWS_AS(wss.route(port, channel), Error);
        }
        break;
      }
      case 1:
        wss.route(port, channel, RoutePolicy::replace);
        wss_model[channel] = port;
        break;
      default:
        CHECK_NOTHROW(wss.unroute(channel));
        wss_model.erase(channel);
    }
  }
  CHECK(wss.routes() == wss_model);

  McsState mcs(8, 16);
  std::map<int, int> mcs_model;
  for (int i = 0; i < 20000; ++i) {
    const int client = static_cast<int>(rng() % 8);
    const int degree = static_cast<int>(rng() % 16);
    if (rng() % 2 == 0) {
      if (mcs_model.count(client) == 0) {
        mcs.connect(client, degree);
        mcs_model[client] = degree;
      } else {
        CHECK_THROWS_AS(mcs.connect(client, degree), Error);
      }
    } else {
      CHECK_NOTHROW(mcs.disconnect(client));
      mcs_model.erase(client);
    }
  }
  CHECK(mcs.connections() == mcs_model);
}
