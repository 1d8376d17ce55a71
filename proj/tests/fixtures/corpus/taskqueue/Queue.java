package taskqueue;

import java.util.ArrayDeque;
import java.util.Deque;

public final class TaskQueue {
    private final Deque<ScheduledTask> pendingTasks = new ArrayDeque<>();
    private final Object lock = new Object();

    public void submitTask(ScheduledTask task) {
        synchronized (lock) {
            pendingTasks.addLast(task);
            lock.notifyAll();
        }
    }

    public ScheduledTask takeTask() throws InterruptedException {
        synchronized (lock) {
            while (pendingTasks.isEmpty()) {
                lock.wait();
            }
            return pendingTasks.removeFirst();
        }
    }

    public int pendingCount() {
        synchronized (lock) {
            return pendingTasks.size();
        }
    }
}
