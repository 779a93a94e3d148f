#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fifosim/rng.hpp"
#include "fifosim/time.hpp"

namespace fifosim {

using ParticipantId = std::uint32_t;

enum class Side : std::uint8_t { Bid, Ask };

constexpr Side opposite(Side s) { return s == Side::Bid ? Side::Ask : Side::Bid; }

enum class MsgKind : std::uint8_t { Limit, Market, Cancel };

/// A participant's instruction as decoded at the matching engine.
/// For Cancel, order_id names the resting order to remove.
struct OrderMessage {
  std::uint64_t order_id{0};
  ParticipantId participant{0};
  MsgKind kind{MsgKind::Limit};
  Side side{Side::Bid};
  std::int64_t price{0};  // integer ticks; ignored for Market and Cancel
  std::int64_t qty{0};    // units; ignored for Cancel
};

/// An order resting in the book. engine_seq is the priority key: strictly
/// increasing in engine processing order, so two arrivals at the same
/// nanosecond still have a total order.
struct Order {
  std::uint64_t id{0};
  ParticipantId participant{0};
  Side side{Side::Bid};
  std::int64_t price{0};
  std::int64_t qty{0};  // remaining
  SimTime engine_arrival{0};
  std::uint64_t engine_seq{0};
};

/// Executed at the maker's resting price.
struct Trade {
  std::uint64_t taker_order{0};
  std::uint64_t maker_order{0};
  std::int64_t price{0};
  std::int64_t qty{0};
  SimTime at{0};
};

/// Per-fill audit datum: the maker that filled vs the FIFO head of its level
/// at that instant. Ground truth for the price-time-priority check; any
/// maker_seq != head_seq is a priority violation.
struct FillAudit {
  std::int64_t price{0};
  Side side{Side::Bid};
  std::uint64_t maker_seq{0};
  std::uint64_t head_seq{0};
};

struct ProcessResult {
  std::vector<Trade> trades;
  std::vector<FillAudit> fills;
  bool rested{false};
  bool cancelled{false};
  bool cancel_too_late{false};  // cancel lost the race: order unknown or already gone
  std::uint64_t engine_seq{0};  // seq assigned to a new order; 0 for cancels
};

struct LevelSnapshot {
  std::int64_t price{0};
  std::vector<Order> queue;  // engine_seq ascending
};

/// Value copy of both sides, best price first.
struct BookSnapshot {
  std::vector<LevelSnapshot> bids;
  std::vector<LevelSnapshot> asks;
};

/// Fault-injection knob: LifoBuggy fills the back of the level queue instead
/// of the head, for exercising the priority-violation detector.
enum class QueueDiscipline : std::uint8_t { Fifo, LifoBuggy };

struct BatchOutcome {
  std::vector<std::size_t> order;  // processing order as indices into the input span
  std::vector<ProcessResult> results;  // aligned with `order`
};

/// Single-instrument limit order book with FIFO (price-time) matching.
class Book {
 public:
  /// Match/rest/cancel one message. `arrival` stamps the order's engine
  /// arrival; `exec_at` stamps trades (defaults to arrival; differs when
  /// processing is deferred, e.g. batch windows).
  ProcessResult process_message(const OrderMessage& msg, SimTime arrival);
  ProcessResult process_message(const OrderMessage& msg, SimTime arrival, SimTime exec_at);

  /// Uniformly shuffle the window's messages, then process them sequentially
  /// at the window close. Within-window arrival order has no influence.
  BatchOutcome batch_process(std::span<const OrderMessage> msgs, SimTime at_close,
                             RngStream& rng);

  BookSnapshot snapshot() const;
  std::optional<std::int64_t> best_bid() const;
  std::optional<std::int64_t> best_ask() const;
  bool side_empty(Side s) const;
  std::size_t resting_orders() const { return live_.size(); }

  void set_queue_discipline(QueueDiscipline d) { discipline_ = d; }

 private:
  using LevelQueue = std::deque<Order>;

  void match(Order& taker, SimTime exec_at, ProcessResult& res);
  ProcessResult handle_cancel(const OrderMessage& msg);

  std::map<std::int64_t, LevelQueue, std::greater<>> bids_;  // best (highest) first
  std::map<std::int64_t, LevelQueue, std::less<>> asks_;     // best (lowest) first
  std::unordered_map<std::uint64_t, std::pair<Side, std::int64_t>> live_;  // id -> locator
  std::uint64_t next_engine_seq_{0};
  QueueDiscipline discipline_{QueueDiscipline::Fifo};
};

}  // namespace fifosim
