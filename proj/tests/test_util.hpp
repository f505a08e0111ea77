#ifndef NETCTRL_TEST_UTIL_HPP
#define NETCTRL_TEST_UTIL_HPP

#include <doctest.h>
#include <netctrl/error.hpp>

#include <functional>

// Asserts that fn throws netctrl::Error with the given code.
inline void expect_error(netctrl::ErrorCode code, const std::function<void()>& fn) {
    try {
        fn();
        FAIL_CHECK("expected error " << netctrl::to_string(code) << ", nothing thrown");
    } catch (const netctrl::Error& e) {
        CHECK(e.code() == code);
    } catch (const std::exception& e) {
        FAIL_CHECK("expected netctrl::Error, got: " << e.what());
    }
}

#endif
