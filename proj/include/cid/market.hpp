#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cid/time.hpp"

namespace cid {

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A tradable delivery period: (delivery start, length). Hourly products are
// aligned to full hours, quarter-hourly ones to quarter-hour boundaries.
struct Product {
    TimePoint delivery_start = 0;
    int length_min = 60;  // 60 or 15

    bool is_hourly() const { return length_min == 60; }
    TimePoint delivery_end() const { return delivery_start + length_min * kMinute; }
    Product shifted_hours(int h) const { return Product{delivery_start + h * kHour, length_min}; }

    auto operator<=>(const Product&) const = default;
};

std::string to_string(const Product& p);

// The four quarter-hour products covering the hour starting at hour_start.
std::array<Product, 4> quarter_products(TimePoint hour_start);

struct Trade {
    Product product;
    TimePoint exec_time = 0;  // second precision, strictly before delivery
    double volume_mw = 0.0;
    double price = 0.0;  // EUR/MWh
    std::string area;
};

struct LobLevel {
    double price = 0.0;
    double volume_mw = 0.0;
};

// Resting limit orders for one product at one instant. Bids are sorted by
// price descending, asks ascending, level 0 being the best quote.
struct LobSnapshot {
    Product product;
    TimePoint time = 0;
    std::vector<LobLevel> bids;
    std::vector<LobLevel> asks;
};

enum class Horizon { day_ahead, intraday };

std::string to_string(Horizon h);
Horizon horizon_from_string(const std::string& s);

struct FundamentalRecord {
    TimePoint delivery_start = 0;
    Horizon horizon = Horizon::day_ahead;
    std::optional<double> load_mw;  // day-ahead only
    double solar_mw = 0.0;
    double wind_onshore_mw = 0.0;
    double wind_offshore_mw = 0.0;
};

struct ImbalanceRecord {
    TimePoint quarter_start = 0;
    double saldo_mw = 0.0;  // signed
    TimePoint publish_time = 0;
};

// ---------------------------------------------------------------------------
// Forecast-period algebra
// ---------------------------------------------------------------------------

enum class PeriodId { P3to2, P2to1, P1toHalf };

inline constexpr std::array<PeriodId, 3> kAllPeriods{PeriodId::P3to2, PeriodId::P2to1,
                                                     PeriodId::P1toHalf};

std::string to_string(PeriodId p);
PeriodId period_from_string(const std::string& s);

// Forecast window bounds, minutes before delivery start.
inline constexpr int kWindowStartMin = 180;
inline constexpr int kWindowEndMin = 35;

// Half-open partition of the forecast window; the boundary minute belongs to
// the later (shorter lead time) period. Throws outside [s-180min, s-35min].
PeriodId period_of(TimePoint forecast_time, const Product& current);

// Hour offsets of the hourly neighbors considered in a period.
std::span<const int> hourly_neighbor_offsets(PeriodId p);

// All neighbor products of a period: the hourly neighbors plus the
// quarter-hour products of every included hour and of the current hour.
// Hourly products first (ascending start), then quarter-hours ascending.
std::vector<Product> neighbors_for_period(const Product& current, PeriodId p);

// Minute grid [s - start_min, s - end_min], inclusive on both ends.
std::vector<TimePoint> forecast_grid(const Product& current, int start_min = kWindowStartMin,
                                     int end_min = kWindowEndMin);

// ---------------------------------------------------------------------------
// MarketDataset
// ---------------------------------------------------------------------------

// Immutable after construction; safe for concurrent shared reads. All as-of
// accessors only ever return data with timestamp <= query time.
class MarketDataset {
public:
    struct ProductTape {
        std::vector<Trade> trades;  // sorted by exec_time, ties in ingestion order
        std::vector<LobSnapshot> lobs;  // sorted by time
        // Prefix sums over trades (size trades+1): volume, volume*price,
        // volume*price^2. Feature code derives VWAP/VWSD in O(log n).
        std::vector<double> pfx_vol;
        std::vector<double> pfx_vp;
        std::vector<double> pfx_vp2;

        // Number of trades with exec_time <= t.
        std::size_t count_up_to(TimePoint t) const;
        // Number of trades with exec_time < t.
        std::size_t count_before(TimePoint t) const;
    };

    const ProductTape* tape(const Product& p) const;
    const LobSnapshot* lob_as_of(const Product& p, TimePoint t) const;
    const FundamentalRecord* fundamental(TimePoint delivery_start, Horizon h) const;
    // Record with the latest quarter_start among those with publish_time <= t.
    const ImbalanceRecord* imbalance_as_of(TimePoint t) const;

    std::vector<Product> hourly_products() const;
    std::vector<Product> all_products() const;
    const std::vector<FundamentalRecord>& fundamentals() const { return fundamentals_; }
    const std::vector<ImbalanceRecord>& imbalances() const { return imbalances_; }
    const std::map<Product, ProductTape>& products() const { return products_; }

    TimePoint min_time() const { return min_time_; }
    TimePoint max_time() const { return max_time_; }
    bool empty() const { return products_.empty(); }

private:
    friend class DatasetBuilder;
    std::map<Product, ProductTape> products_;
    std::vector<FundamentalRecord> fundamentals_;   // sorted by (delivery_start, horizon)
    std::vector<ImbalanceRecord> imbalances_;       // sorted by publish_time
    std::vector<std::size_t> imbalance_best_;       // argmax quarter_start among first i+1
    TimePoint min_time_ = 0;
    TimePoint max_time_ = 0;
};

// Validates every domain invariant at ingestion and throws ValidationError
// with context on the first violation (crossed books, non-positive volumes,
// trades at or after delivery, imbalance publication outside [qs+15m, qs+45m]).
class DatasetBuilder {
public:
    DatasetBuilder& add_trade(Trade t);
    DatasetBuilder& add_lob(LobSnapshot s);
    DatasetBuilder& add_fundamental(FundamentalRecord r);
    DatasetBuilder& add_imbalance(ImbalanceRecord r);
    MarketDataset build();

private:
    std::vector<Trade> trades_;
    std::vector<LobSnapshot> lobs_;
    std::vector<FundamentalRecord> fundamentals_;
    std::vector<ImbalanceRecord> imbalances_;
};

void validate_product(const Product& p);
void validate_lob(const LobSnapshot& s);

}  // namespace cid
