#include "holant/parallel.hpp"

namespace holant {

namespace {
std::atomic<unsigned> configured_threads{0};
}

void set_threads(unsigned n)
{
    configured_threads = n;
}

unsigned threads()
{
    const unsigned n = configured_threads;
    if (n != 0) {
        return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace holant
