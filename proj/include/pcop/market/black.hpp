#pragma once

namespace pcop {

enum class OptionType { Call, Put };

/// Black price on the forward: discount * E[(F_T - K)^+] (or the put).
double bs_price(double forward, double strike, double maturity, double vol, double discount,
                OptionType type);

/// Undiscounted forward delta N(d1) for calls, N(d1) - 1 for puts.
double forward_delta(double forward, double strike, double maturity, double vol, OptionType type);

/// Inverse of bs_price in vol. Throws OutOfBounds if price is outside the
/// no-arbitrage band (intrinsic, upper bound).
double implied_vol(double price, double forward, double strike, double maturity, double discount,
                   OptionType type);

}  // namespace pcop
