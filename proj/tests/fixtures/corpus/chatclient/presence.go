package chatclient

import "sync"

type PresenceTracker struct {
	mutex   sync.Mutex
	online  map[string]bool
	lastSeen map[string]int64
}

func NewPresenceTracker() *PresenceTracker {
	return &PresenceTracker{
		online:   make(map[string]bool),
		lastSeen: make(map[string]int64),
	}
}

func (tracker *PresenceTracker) MarkOnline(nickname string, timestamp int64) {
	tracker.mutex.Lock()
	defer tracker.mutex.Unlock()
	tracker.online[nickname] = true
	tracker.lastSeen[nickname] = timestamp
}

func (tracker *PresenceTracker) MarkOffline(nickname string) {
	tracker.mutex.Lock()
	defer tracker.mutex.Unlock()
	delete(tracker.online, nickname)
}

func (tracker *PresenceTracker) OnlineCount() int {
	tracker.mutex.Lock()
	defer tracker.mutex.Unlock()
	return len(tracker.online)
}
