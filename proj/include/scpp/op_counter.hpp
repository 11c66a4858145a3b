#ifndef SCPP_OP_COUNTER_HPP
#define SCPP_OP_COUNTER_HPP

#include <cstdint>

namespace scpp::ops
{

namespace detail
{
inline thread_local std::uint64_t *active_counter = nullptr;
} // namespace detail

/**
 * Abstract operation counter.
 *
 * Every elementary step of the library's algorithms (a read, write,
 * comparison or loop iteration over a permutation entry or word letter)
 * calls tick(). Ticks are only recorded while a CountingScope is alive on
 * the calling thread, so counting is per thread and free of shared state.
 */
inline void tick(std::uint64_t k = 1) noexcept
{
  if (detail::active_counter)
    *detail::active_counter += k;
}

class CountingScope
{
public:
  CountingScope() noexcept
  : previous_(detail::active_counter)
  { detail::active_counter = &count_; }

  ~CountingScope()
  {
    detail::active_counter = previous_;
    if (previous_)
      *previous_ += count_;
  }

  CountingScope(CountingScope const &) = delete;
  CountingScope &operator=(CountingScope const &) = delete;

  std::uint64_t count() const noexcept
  { return count_; }

private:
  std::uint64_t count_ = 0;
  std::uint64_t *previous_;
};

} // namespace scpp::ops

#endif // SCPP_OP_COUNTER_HPP
