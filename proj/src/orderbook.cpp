#include "fifosim/orderbook.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fifosim {

namespace {

bool crosses(const Order& taker, std::int64_t maker_price) {
  return taker.side == Side::Bid ? taker.price >= maker_price : taker.price <= maker_price;
}

}  // namespace

ProcessResult Book::process_message(const OrderMessage& msg, SimTime arrival) {
  return process_message(msg, arrival, arrival);
}

ProcessResult Book::process_message(const OrderMessage& msg, SimTime arrival, SimTime exec_at) {
  if (msg.kind == MsgKind::Cancel) return handle_cancel(msg);

  if (msg.qty <= 0) throw std::invalid_argument("Book: order qty must be positive");

  ProcessResult res;
  Order incoming{msg.order_id, msg.participant, msg.side,
                 msg.kind == MsgKind::Market
                     ? (msg.side == Side::Bid ? std::numeric_limits<std::int64_t>::max()
                                              : std::numeric_limits<std::int64_t>::min())
                     : msg.price,
                 msg.qty, arrival, ++next_engine_seq_};
  res.engine_seq = incoming.engine_seq;

  match(incoming, exec_at, res);

  if (incoming.qty > 0 && msg.kind == MsgKind::Limit) {
    if (incoming.side == Side::Bid) {
      bids_[incoming.price].push_back(incoming);
    } else {
      asks_[incoming.price].push_back(incoming);
    }
    live_.emplace(incoming.id, std::make_pair(incoming.side, incoming.price));
    res.rested = true;
  }
  // unfilled market remainder is discarded
  return res;
}

void Book::match(Order& taker, SimTime exec_at, ProcessResult& res) {
  auto fill_from = [&](auto& levels) {
    while (taker.qty > 0 && !levels.empty()) {
      auto level_it = levels.begin();
      if (!crosses(taker, level_it->first)) break;
      LevelQueue& queue = level_it->second;
      const std::uint64_t head_seq = queue.front().engine_seq;
      Order& maker = discipline_ == QueueDiscipline::Fifo ? queue.front() : queue.back();
      const std::int64_t fill = std::min(taker.qty, maker.qty);
      res.trades.push_back(Trade{taker.id, maker.id, maker.price, fill, exec_at});
      res.fills.push_back(FillAudit{maker.price, maker.side, maker.engine_seq, head_seq});
      taker.qty -= fill;
      maker.qty -= fill;
      if (maker.qty == 0) {
        live_.erase(maker.id);
        if (discipline_ == QueueDiscipline::Fifo) {
          queue.pop_front();
        } else {
          queue.pop_back();
        }
        if (queue.empty()) levels.erase(level_it);
      }
    }
  };
  if (taker.side == Side::Bid) {
    fill_from(asks_);
  } else {
    fill_from(bids_);
  }
}

ProcessResult Book::handle_cancel(const OrderMessage& msg) {
  ProcessResult res;
  auto it = live_.find(msg.order_id);
  if (it == live_.end()) {
    res.cancel_too_late = true;  // unknown or already filled: report, no-op
    return res;
  }
  const auto [side, price] = it->second;
  auto erase_from = [&](auto& levels) {
    auto level_it = levels.find(price);
    LevelQueue& queue = level_it->second;
    auto order_it = std::find_if(queue.begin(), queue.end(),
                                 [&](const Order& o) { return o.id == msg.order_id; });
    queue.erase(order_it);
    if (queue.empty()) levels.erase(level_it);
  };
  if (side == Side::Bid) {
    erase_from(bids_);
  } else {
    erase_from(asks_);
  }
  live_.erase(it);
  res.cancelled = true;
  return res;
}

BatchOutcome Book::batch_process(std::span<const OrderMessage> msgs, SimTime at_close,
                                 RngStream& rng) {
  BatchOutcome out;
  out.order.resize(msgs.size());
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  rng.shuffle(out.order);
  out.results.reserve(msgs.size());
  for (std::size_t idx : out.order) {
    out.results.push_back(process_message(msgs[idx], at_close));
  }
  return out;
}

BookSnapshot Book::snapshot() const {
  BookSnapshot snap;
  snap.bids.reserve(bids_.size());
  for (const auto& [price, queue] : bids_) {
    snap.bids.push_back(LevelSnapshot{price, {queue.begin(), queue.end()}});
  }
  snap.asks.reserve(asks_.size());
  for (const auto& [price, queue] : asks_) {
    snap.asks.push_back(LevelSnapshot{price, {queue.begin(), queue.end()}});
  }
  return snap;
}

std::optional<std::int64_t> Book::best_bid() const {
  if (bids_.empty()) return std::nullopt;
  return bids_.begin()->first;
}

std::optional<std::int64_t> Book::best_ask() const {
  if (asks_.empty()) return std::nullopt;
  return asks_.begin()->first;
}

bool Book::side_empty(Side s) const { return s == Side::Bid ? bids_.empty() : asks_.empty(); }

}  // namespace fifosim
